#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "printing.hpp"
#include "process.hpp"
#include "rptgeo/example_g.hpp"
#include "rptgeo/levi_civita.hpp"
#include "rptgeo/spec_io.hpp"
#include "rptgeo/theorems.hpp"

#include <algorithm>

using namespace rptgeo;
using namespace rptgeo::testing;

namespace {

Scalar l(std::size_t i) { return Scalar::variable(i - 1); }
Scalar sum_squares() { return l(1).pow(2) + l(2).pow(2) + l(3).pow(2) + l(4).pow(2); }

FrameAlgebra numeric(const std::array<Rational, 4>& lambda) { return build_example(ExampleSpec::numeric(lambda)); }

std::array<Scalar, 4> scalars(const std::array<Rational, 4>& v) { return {v[0], v[1], v[2], v[3]}; }

bool has_detail(const TheoremResult& r, const std::string& text) {
  return std::find(r.details.begin(), r.details.end(), text) != r.details.end();
}

/// All 1-based 4-tuples where the cyclic sum over the first three slots is nonzero.
std::vector<Index> bianchi_failures(const Tensor& l4) {
  std::vector<Index> out;
  const std::size_t n = l4.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w)
          if (!(l4(x, y, z, w) + l4(y, z, x, w) + l4(z, x, y, w)).is_zero()) out.push_back({x + 1, y + 1, z + 1, w + 1});
  return out;
}

/// The curvature relation between R and R' written with explicit loops.
Tensor curvature_relation_oracle(const FrameAlgebra& fa, const ConnectionPack& pack) {
  const Tensor rp = riemann_direct(fa, pack.rpt.coefficients);
  const Tensor nt = covariant_derivative_direct(pack.rpt.coefficients, pack.T);
  const Tensor tt = pairing_direct(pack.T, fa.inverse_metric());
  const Tensor sigma = sigma_direct(pack.T, fa.inverse_metric());
  return Tensor::generate(fa.dim(), std::vector<Variance>(4, Variance::Co), [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2], w = v[3];
    return rp(x, y, z, w) - nt(x, y, z, w) / Scalar(2) + nt(y, x, z, w) / Scalar(2) - tt(x, y, z, w) / Scalar(4) -
           sigma(x, y, z, w) / Scalar(4);
  });
}

}  // namespace

TEST_SUITE("check_p_tensor") {
  TEST_CASE("R' for lambda = (1,2,1,2) is a P-tensor") {
    const FrameAlgebra fa = numeric({1, 2, 1, 2});
    const TheoremResult r = check_p_tensor(curvature(fa, rpt_connection(fa).rpt).riemann, fa);
    CHECK(r.conclusion_holds);
    CHECK(r.status() == Status::Pass);
  }

  TEST_CASE("R' for lambda = (1,2,3,4) fails Bianchi at a tuple the oracle confirms") {
    const FrameAlgebra fa = numeric({1, 2, 3, 4});
    const Tensor rp = curvature(fa, rpt_connection(fa).rpt).riemann;
    const TheoremResult r = check_p_tensor(rp, fa);
    CHECK_FALSE(r.conclusion_holds);
    const auto oracle = bianchi_failures(rp);
    REQUIRE_FALSE(oracle.empty());
    std::size_t bianchi = 0;
    for (const Witness& w : r.witnesses) {
      if (w.what != "S L(x,y,z,w) = 0") continue;
      ++bianchi;
      CHECK(std::find(oracle.begin(), oracle.end(), w.index) != oracle.end());
    }
    CHECK(bianchi > 0);
  }

  TEST_CASE("zero tensor is a P-tensor") {
    CHECK(check_p_tensor(Tensor::covariant(4, 4), numeric({1, 2, 3, 4})).conclusion_holds);
  }
}

TEST_SUITE("curvature relation") {
  TEST_CASE("symbolic example: scalar curvatures") {
    const FrameAlgebra fa = build_example(ExampleSpec::symbolic());
    const ConnectionPack pack = rpt_connection(fa);
    const TheoremResult r = verify_curvature_relation(fa, pack);
    CHECK(r.status() == Status::Pass);
    const Scalar tau = curvature(fa, pack.nabla).scalar;
    const Scalar tau_p = curvature(fa, pack.rpt).scalar;
    CHECK(tau_p == Scalar(-4) * sum_squares());
    CHECK(tau - tau_p == Scalar(Rational(3, 2)) * sum_squares());
    CHECK(has_detail(r, "tau' = " + to_string(tau_p, fa.params())));
  }

  TEST_CASE("lambda = (1,2,3,4): tau = -75, tau' = -120, difference 3/8 of 120") {
    const FrameAlgebra fa = numeric({1, 2, 3, 4});
    const ConnectionPack pack = rpt_connection(fa);
    CHECK(verify_curvature_relation(fa, pack).status() == Status::Pass);
    const Scalar tau = curvature(fa, pack.nabla).scalar;
    const Scalar tau_p = curvature(fa, pack.rpt).scalar;
    CHECK(tau == Scalar(-75));
    CHECK(tau_p == Scalar(-120));
    CHECK(tau - tau_p == Scalar(Rational(3, 8)) * square_norm_nabla_P(fa, pack.nabla));
  }

  TEST_CASE("W0: tau = tau'") {
    const FrameAlgebra fa = numeric({0, 0, 0, 0});
    const ConnectionPack pack = rpt_connection(fa);
    CHECK(verify_curvature_relation(fa, pack).status() == Status::Pass);
    CHECK(curvature(fa, pack.nabla).scalar == curvature(fa, pack.rpt).scalar);
  }

  TEST_CASE("R agrees with the loop-built relation on W3 frames") {
    Gen gen(51);
    for (const FrameAlgebra& fa : {build_example(ExampleSpec::symbolic()), rotated_example(gen),
                                   direct_sum(random_example(gen), abelian_plane())}) {
      const ConnectionPack pack = rpt_connection(fa);
      CHECK(curvature(fa, pack.nabla).riemann == curvature_relation_oracle(fa, pack));
    }
  }
}

TEST_SUITE("torsion type") {
  TEST_CASE("symbolic example passes every clause") {
    const FrameAlgebra fa = build_example(ExampleSpec::symbolic());
    const TheoremResult r = verify_torsion_type(fa, rpt_connection(fa));
    CHECK(r.status() == Status::Pass);
    CHECK(r.witnesses.empty());
  }

  TEST_CASE("lambda = (1,0,0,0) is still W3-strict and passes") {
    const FrameAlgebra fa = numeric({1, 0, 0, 0});
    const ConnectionPack pack = rpt_connection(fa);
    CHECK(verify_torsion_type(fa, pack).status() == Status::Pass);
    // p2(x,y,z) = F(z,x,Py) evaluated directly
    const TorsionProjections p = torsion_projections(pack.T, fa);
    const Tensor fp = apply_endomorphism(pack.F, 2, fa.product());
    CHECK(p.p2 == permute(fp, {2, 0, 1}));
  }

  TEST_CASE("all lambda zero is a skip") {
    const FrameAlgebra fa = numeric({0, 0, 0, 0});
    const TheoremResult r = verify_torsion_type(fa, rpt_connection(fa));
    CHECK_FALSE(r.hypotheses_satisfied);
    CHECK(r.status() == Status::Skip);
    CHECK_FALSE(r.reason.empty());
  }
}

TEST_SUITE("P-tensor curvature") {
  TEST_CASE("lambda = (1,2,1,2): both sides hold") {
    const FrameAlgebra fa = numeric({1, 2, 1, 2});
    const TheoremResult r = verify_p_tensor_curvature(fa, rpt_connection(fa));
    CHECK(r.status() == Status::Pass);
    CHECK(has_detail(r, "(a) R' is a P-tensor: true"));
    CHECK(has_detail(r, "(b) curvature relation: true"));
  }

  TEST_CASE("lambda = (1,2,3,4): both sides fail") {
    const FrameAlgebra fa = numeric({1, 2, 3, 4});
    const ConnectionPack pack = rpt_connection(fa);
    const TheoremResult r = verify_p_tensor_curvature(fa, pack);
    CHECK(r.status() == Status::Pass);
    CHECK(has_detail(r, "(a) R' is a P-tensor: false"));
    CHECK(has_detail(r, "(b) curvature relation: false"));
    CHECK_FALSE(r.evidence.empty());
    // side (b) evaluated independently
    const Tensor rhs = riemann_direct(fa, pack.rpt.coefficients) -
                       pairing_direct(pack.T, fa.inverse_metric()) * Scalar(Rational(1, 4)) +
                       sigma_direct(pack.T, fa.inverse_metric()) * Scalar(Rational(1, 12));
    CHECK_FALSE(rhs == curvature(fa, pack.nabla).riemann);
  }

  TEST_CASE("W0: both sides hold and the result is a skip") {
    const FrameAlgebra fa = numeric({0, 0, 0, 0});
    const TheoremResult r = verify_p_tensor_curvature(fa, rpt_connection(fa));
    CHECK(r.conclusion_holds);
    CHECK(r.status() == Status::Skip);
    CHECK(has_detail(r, "(a) R' is a P-tensor: true"));
    CHECK(has_detail(r, "(b) curvature relation: true"));
  }
}

TEST_SUITE("parallel torsion") {
  TEST_CASE("lambda = (1,2,1,2) and (1,2,-1,-2) are parallel") {
    for (const auto& lambda : {std::array<Rational, 4>{1, 2, 1, 2}, std::array<Rational, 4>{1, 2, -1, -2}}) {
      const FrameAlgebra fa = numeric(lambda);
      const ConnectionPack pack = rpt_connection(fa);
      const TheoremResult r = verify_parallel_torsion(fa, pack);
      CHECK(r.status() == Status::Pass);
      CHECK(has_detail(r, "(a) nabla'T = 0: true"));
      CHECK(has_detail(r, "(b) curvature relation: true"));
      CHECK(has_detail(r, "R' is also a P-tensor"));
      CHECK(sigma_T(pack.T, fa).is_zero());
    }
  }

  TEST_CASE("lambda = (1,2,3,4) is not parallel, with (nabla'_1 T)_234 = -8") {
    const FrameAlgebra fa = numeric({1, 2, 3, 4});
    const TheoremResult r = verify_parallel_torsion(fa, rpt_connection(fa));
    CHECK(r.status() == Status::Pass);
    CHECK(has_detail(r, "(a) nabla'T = 0: false"));
    CHECK(has_detail(r, "(b) curvature relation: false"));
    const bool found = std::any_of(r.evidence.begin(), r.evidence.end(), [](const Witness& w) {
      return w.what == "(nabla'_i T)_jks" && w.index == Index{1, 2, 3, 4} && w.actual == Scalar(-8);
    });
    CHECK(found);
  }
}

TEST_SUITE("example equivalence") {
  TEST_CASE("all three conditions hold together") {
    for (const auto& v : {std::array<Rational, 4>{1, 2, 1, 2}, std::array<Rational, 4>{1, 2, -1, -2},
                          std::array<Rational, 4>{3, 0, 3, 0}}) {
      const TheoremResult r = verify_example_equivalence(scalars(v));
      CHECK(r.status() == Status::Pass);
      CHECK(has_detail(r, "(i)=(ii)=(iii)=true"));
    }
  }

  TEST_CASE("all three conditions fail together") {
    for (const auto& v : {std::array<Rational, 4>{1, 2, 3, 4}, std::array<Rational, 4>{1, 0, 0, 1},
                          std::array<Rational, 4>{1, 1, 2, 2}, std::array<Rational, 4>{1, 0, 0, 0}}) {
      const TheoremResult r = verify_example_equivalence(scalars(v));
      CHECK(r.status() == Status::Pass);
      CHECK(has_detail(r, "(i)=(ii)=(iii)=false"));
    }
  }

  TEST_CASE("all lambda zero is reported as a skip") {
    const TheoremResult r = verify_example_equivalence(scalars({0, 0, 0, 0}));
    CHECK_FALSE(r.hypotheses_satisfied);
    CHECK(r.status() == Status::Skip);
    CHECK(has_detail(r, "(i)=(ii)=(iii)=true"));
  }

  TEST_CASE("symbolic lambda decides every condition as false") {
    const ExampleSpec s = ExampleSpec::symbolic();
    const TheoremResult r = verify_example_equivalence(s.lambda, s.params);
    CHECK(r.status() == Status::Pass);
    CHECK(has_detail(r, "(i)=(ii)=(iii)=false"));
  }
}

TEST_SUITE("run_all") {
  TEST_CASE("symbolic example passes everything") {
    const auto results = run_all(build_example(ExampleSpec::symbolic()));
    CHECK(results.size() == 28);
    for (const auto& r : results) {
      INFO(r.id);
      CHECK(r.status() == Status::Pass);
    }
  }

  TEST_CASE("abelian frame passes or skips") {
    const auto results = run_all(load_spec(data_dir() / "abelian.json"));
    std::size_t skipped = 0;
    for (const auto& r : results) {
      INFO(r.id);
      CHECK(r.status() != Status::Fail);
      if (r.status() == Status::Skip) {
        ++skipped;
        CHECK_FALSE(r.reason.empty());
      }
    }
    CHECK(skipped > 0);
  }

  TEST_CASE("non-W3 frame skips RPT checks with a NotW3 reason") {
    const FrameAlgebra fa = load_spec(data_dir() / "nonw3.json");
    const auto rpt = run_all(fa, Suite::Rpt);
    REQUIRE_FALSE(rpt.empty());
    for (const auto& r : rpt) {
      INFO(r.id);
      CHECK(r.status() == Status::Skip);
      CHECK(r.reason.rfind("NotW3", 0) == 0);
    }
    const auto geometry = run_all(fa, Suite::Geometry);
    for (const auto& r : geometry) {
      INFO(r.id);
      if (r.advisory) continue;
      CHECK(r.status() == Status::Pass);
    }
  }

  TEST_CASE("ordering is deterministic and ids are unique") {
    const FrameAlgebra fa = numeric({1, 2, 3, 4});
    const auto a = run_all(fa), b = run_all(fa);
    REQUIRE(a.size() == b.size());
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].id == b[i].id);
      ids.push_back(a[i].id);
    }
    std::sort(ids.begin(), ids.end());
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  }

  TEST_CASE("suite names") {
    CHECK(parse_suite("all") == Suite::All);
    CHECK(parse_suite("geometry") == Suite::Geometry);
    CHECK(parse_suite("rpt") == Suite::Rpt);
    CHECK(parse_suite("theorems") == Suite::Theorems);
    CHECK_THROWS_AS(parse_suite("everything"), std::invalid_argument);
  }
}
