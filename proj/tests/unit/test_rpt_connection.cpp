#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "printing.hpp"
#include "process.hpp"
#include "rptgeo/example_g.hpp"
#include "rptgeo/levi_civita.hpp"
#include "rptgeo/rpt_connection.hpp"
#include "rptgeo/spec_io.hpp"

using namespace rptgeo;
using namespace rptgeo::testing;

namespace {

Scalar l(std::size_t i) { return Scalar::variable(i - 1); }

const FrameAlgebra& example() {
  static const FrameAlgebra fa = build_example(ExampleSpec::symbolic());
  return fa;
}

const ConnectionPack& example_pack() {
  static const ConnectionPack pack = rpt_connection(example());
  return pack;
}

/// Metric connection with the given totally skew torsion: Levi-Civita shifted by t/2.
Connection skew_torsion_connection(const FrameAlgebra& fa, const Tensor& t) {
  return shift_connection(fa, levi_civita(fa), t * Scalar(Rational(1, 2)), "skew");
}

std::vector<FrameAlgebra> w3_frames(Gen& gen) {
  return {random_example(gen), rotated_example(gen), direct_sum(random_example(gen), abelian_plane()),
          build_example(ExampleSpec::symbolic())};
}

}  // namespace

TEST_SUITE("rpt torsion") {
  TEST_CASE("example: T(X1,X3,X4) = -l1 and T(X1,X2,X3) = -l3") {
    const Tensor& t = example_pack().T;
    CHECK(t(0, 2, 3) == -l(1));
    CHECK(t(0, 1, 2) == -l(3));
  }

  TEST_CASE("repeated arguments give zero") {
    const Tensor& t = example_pack().T;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        CHECK(t(a, a, b).is_zero());
        CHECK(t(a, b, a).is_zero());
        CHECK(t(b, a, a).is_zero());
      }
  }

  TEST_CASE("totally skew on every generated frame, W3 or not") {
    Gen gen(41);
    for (int i = 0; i < 10; ++i) {
      const FrameAlgebra fa = random_valid_frame(gen, i).frame;
      const Tensor t = rpt_torsion(fundamental_F(fa, levi_civita(fa)), fa);
      CHECK(is_skew(t, {0, 1, 2}));
      CHECK(alternate(t, {0, 1, 2}) == t);
    }
  }
}

TEST_SUITE("rpt connection") {
  TEST_CASE("example coefficients from the table") {
    const Connection& c = example_pack().rpt;
    // nabla'_X1 X2 = l1 X1 - l3 X3
    CHECK(c(0, 1, 0) == l(1));
    CHECK(c(0, 1, 1).is_zero());
    CHECK(c(0, 1, 2) == -l(3));
    CHECK(c(0, 1, 3).is_zero());
    // nabla'_X2 X2 = l2 X1 - l4 X3
    CHECK(c(1, 1, 0) == l(2));
    CHECK(c(1, 1, 2) == -l(4));
  }

  TEST_CASE("W0 input gives nabla' = nabla and T = 0") {
    const FrameAlgebra fa = build_example(ExampleSpec::numeric({0, 0, 0, 0}));
    const ConnectionPack pack = rpt_connection(fa);
    CHECK(pack.T.is_zero());
    CHECK(pack.rpt.coefficients == pack.nabla.coefficients);
    CHECK(pack.canonical.coefficients == pack.nabla.coefficients);
  }

  TEST_CASE("non-W3 frames are refused") {
    const FrameAlgebra fa = load_spec(data_dir() / "nonw3.json");
    CHECK(validate(fa).passed);
    CHECK_THROWS_AS(rpt_connection(fa), NotW3);
  }

  TEST_CASE("pack invariants on W3 frames") {
    Gen gen(42);
    for (const FrameAlgebra& fa : w3_frames(gen)) {
      const ConnectionPack pack = rpt_connection(fa);
      const std::size_t n = fa.dim();
      CHECK(pack.Q * Scalar(2) == pack.T);
      CHECK(difference_tensor(fa, pack.nabla, pack.rpt) == pack.Q);
      CHECK(pack.rpt.coefficients == pack.nabla.coefficients + raise(pack.Q, 2, fa.inverse_metric()));
      // torsion recovery: T(x,y) = nabla'_x y - nabla'_y x - [x,y]
      CHECK(torsion(fa, pack.rpt) == pack.T);
      const Tensor& a = pack.rpt.coefficients;
      const Tensor tv = Tensor::generate(n, {Variance::Co, Variance::Co, Variance::Contra}, [&](const Index& v) {
        return a(v[0], v[1], v[2]) - a(v[1], v[0], v[2]) - fa.c(v[0], v[1], v[2]);
      });
      CHECK(lower(tv, 2, fa.metric()) == pack.T);
      // average connection
      CHECK(pack.Q_P * Scalar(2) == pack.Q_C + pack.Q);
      CHECK(difference_tensor(fa, pack.nabla, pack.p_conn) == pack.Q_P);
      CHECK(difference_tensor(fa, pack.nabla, pack.canonical) == pack.Q_C);
    }
  }

  TEST_CASE("cyclic invariance Q(x,y,Pz) = Q(y,Pz,x)") {
    Gen gen(43);
    for (const FrameAlgebra& fa : w3_frames(gen)) {
      const ConnectionPack pack = rpt_connection(fa);
      const Tensor qp = apply_endomorphism(pack.Q, 2, fa.product());
      CHECK(qp == permute(apply_endomorphism(pack.Q, 1, fa.product()), {1, 2, 0}));
    }
  }

  TEST_CASE("torsion identities through F on W3 frames") {
    Gen gen(44);
    for (const FrameAlgebra& fa : w3_frames(gen)) {
      const ConnectionPack pack = rpt_connection(fa);
      const Tensor& t = pack.T;
      const Tensor& f = pack.F;
      const Matrix& p = fa.product();
      const PTwisted tt(t, p), ft(f, p);
      for (std::size_t x = 0; x < fa.dim(); ++x)
        for (std::size_t y = 0; y < fa.dim(); ++y)
          for (std::size_t z = 0; z < fa.dim(); ++z) {
            const Scalar& base = t(x, y, z);
            CHECK(base == tt(0b011, {x, y, z}) - Scalar(2) * ft(0b100, {z, y, x}));
            CHECK(base == tt(0b101, {x, y, z}) - Scalar(2) * ft(0b100, {y, x, z}));
            CHECK(base == tt(0b110, {x, y, z}) - Scalar(2) * ft(0b010, {x, y, z}));
          }
    }
  }
}

TEST_SUITE("natural check") {
  TEST_CASE("the three natural connections pass on the example") {
    CHECK(natural_check(example(), example_pack().rpt).passed);
    CHECK(natural_check(example(), example_pack().canonical).passed);
    CHECK(natural_check(example(), example_pack().p_conn).passed);
  }

  TEST_CASE("Levi-Civita fails on the example with a nabla P witness") {
    const CheckReport r = natural_check(example(), example_pack().nabla);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.witnesses.empty());
  }

  TEST_CASE("Levi-Civita passes on the abelian frame") {
    const FrameAlgebra fa = load_spec(data_dir() / "abelian.json");
    CHECK(natural_check(fa, levi_civita(fa)).passed);
  }

  TEST_CASE("nabla' g and nabla' P vanish as covariant derivatives") {
    const FrameAlgebra& fa = example();
    Tensor g = Tensor::covariant(4, 2), gp = Tensor::covariant(4, 2);
    const Matrix gt = associated_metric(fa);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        g(i, j) = fa.metric()(i, j);
        gp(i, j) = gt(i, j);
      }
    CHECK(covariant_derivative(fa, example_pack().rpt, g).is_zero());
    CHECK(covariant_derivative(fa, example_pack().rpt, gp).is_zero());
    CHECK_FALSE(covariant_derivative(fa, example_pack().nabla, gp).is_zero());
  }
}

TEST_SUITE("sigma") {
  TEST_CASE("example: sigma(X1,X2,X3,X4) = 0 and agrees with the direct expansion") {
    const Tensor s = sigma_T(example_pack().T, example());
    CHECK(s(0, 1, 2, 3).is_zero());
    CHECK(s == sigma_direct(example_pack().T, example().inverse_metric()));
  }

  TEST_CASE("zero torsion gives zero") { CHECK(sigma_T(Tensor::covariant(4, 3), example()).is_zero()); }

  TEST_CASE("4-form with pair symmetry on random 3-forms") {
    Gen gen(45);
    for (int i = 0; i < 5; ++i) {
      const FrameAlgebra fa = random_valid_frame(gen, i).frame;
      const Tensor t = gen.three_form(fa.dim());
      const Tensor s = sigma_T(t, fa);
      CHECK(s == sigma_direct(t, fa.inverse_metric()));
      CHECK(is_skew(s, {0, 1, 2, 3}));
      CHECK(s == permute(s, {2, 3, 0, 1}));
      CHECK(cyclic_sum(s, {0, 1, 2}) == s * Scalar(3));
      CHECK(torsion_pairing(t, fa) == pairing_direct(t, fa.inverse_metric()));
    }
  }

  TEST_CASE("requires a totally skew torsion") {
    Tensor t = Tensor::covariant(4, 3);
    t(0, 1, 2) = 1;
    t(1, 0, 2) = -1;
    CHECK_THROWS_AS(sigma_T(t, example()), TensorError);
  }
}

TEST_SUITE("covariant derivative") {
  TEST_CASE("example torsion derivatives from the table") {
    const Tensor nt = covariant_derivative(example(), example_pack().rpt, example_pack().T);
    CHECK(nt(0, 1, 2, 3) == l(1).pow(2) - l(3).pow(2));
    CHECK(nt(1, 0, 3, 2) == l(2).pow(2) - l(4).pow(2));
    CHECK(nt(0, 0, 3, 2) == l(1) * l(2) - l(3) * l(4));
    CHECK(nt(0, 0, 2, 1) == l(1) * l(4) - l(2) * l(3));
  }

  TEST_CASE("agrees with the direct formula") {
    Gen gen(46);
    for (int i = 0; i < 5; ++i) {
      const FrameAlgebra fa = random_valid_frame(gen, i).frame;
      const Connection lc = levi_civita(fa);
      const Tensor t = gen.covariant_tensor(fa.dim(), 3);
      CHECK(covariant_derivative(fa, lc, t) == covariant_derivative_direct(lc.coefficients, t));
    }
  }
}

TEST_SUITE("exterior derivative of the torsion") {
  TEST_CASE("example torsion is closed") {
    const Tensor dt = exterior_derivative_torsion(example(), example_pack().rpt, example_pack().T);
    CHECK(dt.is_zero());
    CHECK(exterior_derivative_direct(example(), example_pack().T).is_zero());
  }

  TEST_CASE("lambda = (1,2,3,4): dT(X1,X2,X3,X4) = 0") {
    const FrameAlgebra fa = build_example(ExampleSpec::numeric({1, 2, 3, 4}));
    const ConnectionPack pack = rpt_connection(fa);
    CHECK(exterior_derivative_torsion(fa, pack.rpt, pack.T)(0, 1, 2, 3).is_zero());
  }

  TEST_CASE("zero torsion gives zero") {
    const FrameAlgebra fa = load_spec(data_dir() / "nonw3.json");
    CHECK(exterior_derivative_torsion(fa, levi_civita(fa), Tensor::covariant(4, 3)).is_zero());
  }

  TEST_CASE("matches the Chevalley-Eilenberg differential for random 3-forms") {
    Gen gen(47);
    for (int i = 0; i < 10; ++i) {
      const NamedFrame f = random_valid_frame(gen, i);
      INFO(f.label);
      const Tensor t = gen.three_form(f.frame.dim());
      const Tensor dt = exterior_derivative_torsion(f.frame, skew_torsion_connection(f.frame, t), t);
      CHECK(dt == exterior_derivative_direct(f.frame, t));
      CHECK(alternate(dt, {0, 1, 2, 3}) == dt);
    }
  }

  TEST_CASE("precondition violations") {
    const FrameAlgebra& fa = example();
    Tensor not_skew = Tensor::covariant(4, 3);
    not_skew(0, 1, 2) = 1;
    CHECK_THROWS_AS(exterior_derivative_torsion(fa, example_pack().rpt, not_skew), TensorError);
    CHECK_THROWS_AS(exterior_derivative_torsion(fa, example_pack().nabla, example_pack().T), std::invalid_argument);
  }
}
