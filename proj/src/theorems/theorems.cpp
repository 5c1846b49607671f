#include "rptgeo/theorems.hpp"

#include "rptgeo/example_g.hpp"
#include "rptgeo/levi_civita.hpp"

#include <optional>
#include <stdexcept>

namespace rptgeo {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

Index one_based(Index idx) {
  for (auto& i : idx) ++i;
  return idx;
}

std::vector<Witness> differences(const std::string& what, const Tensor& expected, const Tensor& actual) {
  std::vector<Witness> out;
  const auto& e = expected.components();
  const auto& a = actual.components();
  for (std::size_t flat = 0; flat < e.size() && out.size() < kMaxWitnesses; ++flat)
    if (!(e[flat] == a[flat])) out.push_back({what, one_based(expected.unflatten(flat)), e[flat], a[flat]});
  return out;
}

std::vector<Witness> nonzero(const std::string& what, const Tensor& t) {
  std::vector<Witness> out;
  const auto& c = t.components();
  for (std::size_t flat = 0; flat < c.size() && out.size() < kMaxWitnesses; ++flat)
    if (!c[flat].is_zero()) out.push_back({what, one_based(t.unflatten(flat)), std::nullopt, c[flat]});
  return out;
}

/// Records a failed equality and returns whether it held.
bool expect(TheoremResult& r, const std::string& what, const Tensor& expected, const Tensor& actual) {
  auto w = differences(what, expected, actual);
  if (w.empty()) return true;
  r.conclusion_holds = false;
  r.witnesses.insert(r.witnesses.end(), w.begin(), w.end());
  return false;
}

bool expect(TheoremResult& r, const std::string& what, const Scalar& expected, const Scalar& actual) {
  if (expected == actual) return true;
  r.conclusion_holds = false;
  r.witnesses.push_back({what, {}, expected, actual});
  return false;
}

bool expect_zero(TheoremResult& r, const std::string& what, const Tensor& t) {
  return expect(r, what, Tensor(t.dim(), t.variance()), t);
}

bool expect_nonzero(TheoremResult& r, const std::string& what, const Tensor& t) {
  if (!t.is_zero()) return true;
  r.conclusion_holds = false;
  r.witnesses.push_back({what + " (tensor is identically zero)", {}, std::nullopt, Scalar(0)});
  return false;
}

void absorb(TheoremResult& r, const CheckReport& c) {
  if (c.passed) return;
  r.conclusion_holds = false;
  r.witnesses.insert(r.witnesses.end(), c.witnesses.begin(), c.witnesses.end());
}

/// A skipped result keeps what it found as evidence, never as failures.
TheoremResult finalize(TheoremResult r) {
  if (!r.hypotheses_satisfied) {
    r.evidence.insert(r.evidence.end(), r.witnesses.begin(), r.witnesses.end());
    r.witnesses.clear();
  }
  return r;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Tensor as_tensor(const Matrix& m) {
  return Tensor::generate(m.size(), {Variance::Co, Variance::Co}, [&](const Index& v) { return m(v[0], v[1]); });
}

Scalar rational(long p, long q) { return Scalar(p) / Scalar(q); }

/// Quantities derived from an RPT pack, shared by the curvature checks.
struct RptData {
  Curvature r;
  Curvature r_prime;
  Tensor nt;     // (nabla'_x T)(y,z,w)
  Tensor tt;     // g(T(x,y), T(z,w))
  Tensor sigma;  // sigma^T
  Scalar norm;   // |nabla P|^2

  RptData(const FrameAlgebra& fa, const ConnectionPack& pack)
      : r(curvature(fa, pack.nabla)),
        r_prime(curvature(fa, pack.rpt)),
        nt(covariant_derivative(fa, pack.rpt, pack.T)),
        tt(torsion_pairing(pack.T, fa)),
        sigma(sigma_T(pack.T, fa)),
        norm(square_norm_nabla_P(fa, pack.nabla)) {}
};

bool f_is_zero(const ConnectionPack& pack) { return pack.F.is_zero(); }

void require_strict(TheoremResult& r, const ConnectionPack& pack) {
  if (!f_is_zero(pack)) return;
  r.hypotheses_satisfied = false;
  r.reason = "F = 0: the frame is a Riemannian P-manifold, which the statement excludes";
}

TheoremResult make(std::string id, std::string suite, std::string title) {
  TheoremResult r;
  r.id = std::move(id);
  r.suite = std::move(suite);
  r.title = std::move(title);
  return r;
}

// ---- curvature-side checks, shared between the public entry points and run_all

TheoremResult curvature_relation(const FrameAlgebra& fa, const ConnectionPack& pack, const RptData& d) {
  TheoremResult r = make("curvature-relation", "theorems", "R, rho and tau against R', rho' and tau'");
  const Matrix& g_inv = fa.inverse_metric();
  const Scalar half = rational(1, 2), quarter = rational(1, 4);
  const Tensor expected_r = d.r_prime.riemann - d.nt * half + permute(d.nt, {1, 0, 2, 3}) * half -
                            d.tt * quarter - d.sigma * quarter;
  expect(r, "R = R' - 1/2 (nabla'_x T)(y,z,w) + 1/2 (nabla'_y T)(x,z,w) - 1/4 g(T(x,y),T(z,w)) - 1/4 sigma",
         expected_r, d.r.riemann);

  const Tensor trace_nt = contract(d.nt, 0, 3, g_inv);
  const Tensor trace_tt = contract(d.tt, 0, 3, g_inv);
  expect(r, "rho = rho' - 1/2 g^ij (nabla'_i T)(y,z,e_j) - 1/4 g^ij g(T(e_i,y),T(z,e_j))",
         d.r_prime.ricci - trace_nt * half - trace_tt * quarter, d.r.ricci);

  const Scalar full_tt = contract(trace_tt, 0, 1, g_inv).components().front();
  expect(r, "tau = tau' - 1/4 g^ij g^ks g(T(e_i,e_k),T(e_s,e_j))", d.r_prime.scalar - full_tt * quarter,
         d.r.scalar);
  expect(r, "tau = tau' + 3/8 |nabla P|^2", d.r_prime.scalar + d.norm * rational(3, 8), d.r.scalar);

  const bool equal_scalars = d.r.scalar == d.r_prime.scalar;
  if (equal_scalars != f_is_zero(pack)) {
    r.conclusion_holds = false;
    r.witnesses.push_back({"tau = tau' exactly when F = 0", {}, d.r_prime.scalar, d.r.scalar});
  }
  r.details.push_back("tau = " + to_string(d.r.scalar, fa.params()));
  r.details.push_back("tau' = " + to_string(d.r_prime.scalar, fa.params()));
  return r;
}

TheoremResult torsion_type(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("torsion-type", "theorems", "RPT torsion lies in T2 + T3 but in neither alone");
  require_strict(r, pack);
  const TorsionProjections p = torsion_projections(pack.T, fa);
  expect_zero(r, "p1 = 0", p.p1);
  expect_zero(r, "p4 = 0", p.p4);
  expect_nonzero(r, "p2 != 0", p.p2);
  expect_nonzero(r, "p3 != 0", p.p3);
  expect(r, "p1 + p2 + p3 + p4 = T", pack.T, p.p1 + p.p2 + p.p3 + p.p4);

  const PTwisted fp(pack.F, fa.product());
  const Tensor p2 = Tensor::generate(fa.dim(), std::vector<Variance>(3, Variance::Co), [&](const Index& v) {
    return fp(0b100, {v[2], v[0], v[1]});
  });
  const Tensor p3 = Tensor::generate(fa.dim(), std::vector<Variance>(3, Variance::Co), [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2];
    return (fp(0b100, {x, y, z}) + fp(0b100, {y, z, x}) - fp(0b100, {z, x, y})) * rational(1, 2);
  });
  expect(r, "p2(x,y,z) = F(z,x,Py)", p2, p.p2);
  expect(r, "p3(x,y,z) = 1/2 {F(x,y,Pz) + F(y,z,Px) - F(z,x,Py)}", p3, p.p3);
  expect_zero(r, "p4 = T - 1/2 S F(x,y,Pz)", pack.T - rpt_torsion(pack.F, fa));
  return r;
}

TheoremResult p_tensor_curvature(const FrameAlgebra& fa, const ConnectionPack& pack, const RptData& d) {
  TheoremResult r = make("p-tensor-curvature", "theorems",
                         "R' is a Riemannian P-tensor iff R = R' - 1/4 g(T,T) + 1/12 sigma");
  require_strict(r, pack);
  const TheoremResult side_a = check_p_tensor(d.r_prime.riemann, fa);
  const bool a = side_a.conclusion_holds;
  const Tensor rhs = d.r_prime.riemann - d.tt * rational(1, 4) + d.sigma * rational(1, 12);
  const auto b_diff = differences("R = R' - 1/4 g(T(x,y),T(z,w)) + 1/12 sigma", rhs, d.r.riemann);
  const bool b = b_diff.empty();
  r.details.push_back("(a) R' is a P-tensor: " + yes_no(a));
  r.details.push_back("(b) curvature relation: " + yes_no(b));
  r.evidence = side_a.witnesses;
  r.evidence.insert(r.evidence.end(), b_diff.begin(), b_diff.end());
  if (a != b) {
    r.conclusion_holds = false;
    r.witnesses = r.evidence;
  }
  if (a) {
    expect(r, "(nabla'_x T)(y,z,w) = -1/3 sigma(x,y,z,w)", d.sigma * rational(-1, 3), d.nt);
    const Matrix& g_inv = fa.inverse_metric();
    expect(r, "rho = rho' - 1/4 g^ij g(T(e_i,y),T(z,e_j))",
           d.r_prime.ricci - contract(d.tt, 0, 3, g_inv) * rational(1, 4), d.r.ricci);
  }
  return r;
}

TheoremResult parallel_torsion(const FrameAlgebra& fa, const ConnectionPack& pack, const RptData& d) {
  TheoremResult r = make("parallel-torsion", "theorems",
                         "nabla'T = 0 iff R = R' - 1/4 g(T,T) - 1/4 sigma, with its consequences");
  require_strict(r, pack);
  const bool a = d.nt.is_zero();
  const Tensor rhs = d.r_prime.riemann - d.tt * rational(1, 4) - d.sigma * rational(1, 4);
  const auto b_diff = differences("R = R' - 1/4 g(T(x,y),T(z,w)) - 1/4 sigma", rhs, d.r.riemann);
  const bool b = b_diff.empty();
  r.details.push_back("(a) nabla'T = 0: " + yes_no(a));
  r.details.push_back("(b) curvature relation: " + yes_no(b));
  r.evidence = nonzero("(nabla'_i T)_jks", d.nt);
  r.evidence.insert(r.evidence.end(), b_diff.begin(), b_diff.end());
  if (a != b) {
    r.conclusion_holds = false;
    r.witnesses = r.evidence;
  }
  if (a) {
    const Matrix& p = fa.product();
    auto all_p = [&p](Tensor t) {
      for (std::size_t s = 0; s < t.rank(); ++s) t = apply_endomorphism(t, s, p);
      return t;
    };
    expect(r, "R'(x,y,z,w) = R'(z,w,x,y)", d.r_prime.riemann, permute(d.r_prime.riemann, {2, 3, 0, 1}));
    expect(r, "S R'(x,y,z,w) = sigma(x,y,z,w)", d.sigma, cyclic_sum(d.r_prime.riemann, {0, 1, 2}));
    expect(r, "R'(Px,Py,Pz,Pw) = R'(x,y,z,w)", d.r_prime.riemann, all_p(d.r_prime.riemann));
    expect(r, "sigma(Px,Py,Pz,Pw) = sigma(x,y,z,w)", d.sigma, all_p(d.sigma));
    if (check_p_tensor(d.r_prime.riemann, fa).conclusion_holds) {
      r.details.push_back("R' is also a P-tensor");
      expect_zero(r, "sigma = 0", d.sigma);
      expect(r, "R = R' - 1/4 g(T(x,y),T(z,w))", d.r_prime.riemann - d.tt * rational(1, 4), d.r.riemann);
    }
  }
  return r;
}

// ---- geometry suite

TheoremResult structure_check(const FrameAlgebra& fa) {
  TheoremResult r = make("structure", "geometry", "frame algebra axioms");
  const CheckReport c = validate(fa);
  absorb(r, c);
  r.details = c.notes;
  return r;
}

TheoremResult killing_metric(const FrameAlgebra& fa) {
  TheoremResult r = make("killing-metric", "geometry", "g([x,y],Pz) + g([x,z],Py) = 0");
  r.advisory = true;
  absorb(r, killing_check(fa));
  if (!r.conclusion_holds) r.details.push_back("advisory: only the example family is built on this condition");
  return r;
}

TheoremResult levi_civita_check(const FrameAlgebra& fa, const Connection& lc) {
  TheoremResult r = make("levi-civita", "geometry", "Koszul connection is torsion-free and metric");
  expect_zero(r, "A^k_ij - A^k_ji - c^k_ij = 0", torsion_vector(fa, lc));
  Tensor g = as_tensor(fa.metric());
  expect_zero(r, "g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) = 0", covariant_derivative(fa, lc, g));
  return r;
}

TheoremResult f_identities(const FrameAlgebra& fa, const Tensor& f) {
  TheoremResult r = make("f-identities", "geometry", "F(x,y,z) = F(x,z,y) = -F(x,Py,Pz)");
  absorb(r, check_F_identities(fa, f));
  return r;
}

TheoremResult class_check(const FrameAlgebra& fa, const Tensor& f, const ClassLabel& label) {
  TheoremResult r = make("class", "geometry", "class from F and its cyclic sum");
  const bool f_zero = f.is_zero();
  const bool cyclic_zero = cyclic_sum(f, {0, 1, 2}).is_zero();
  if (f_zero != label.f_zero || cyclic_zero != label.cyclic_sum_zero) {
    r.conclusion_holds = false;
    r.witnesses.push_back({"classification disagrees with F", {}, std::nullopt, Scalar(0)});
  }
  r.details.push_back("class = " + to_string(label.kind));
  r.details.push_back("F = 0: " + yes_no(label.f_zero));
  r.details.push_back("S F = 0: " + yes_no(label.cyclic_sum_zero));
  (void)fa;
  return r;
}

TheoremResult nijenhuis_check(const FrameAlgebra& fa, const Connection& lc, const Tensor& f) {
  TheoremResult r = make("nijenhuis", "geometry", "N is antisymmetric and vanishes when F does");
  const Tensor n = nijenhuis(fa, lc);
  expect(r, "N(x,y) = -N(y,x)", -n, permute(n, {1, 0, 2}));
  if (f.is_zero()) expect_zero(r, "N = 0 when F = 0", n);
  r.details.push_back("N = 0: " + yes_no(n.is_zero()));
  return r;
}

TheoremResult norm_check(const FrameAlgebra& fa, const Connection& lc, const Tensor& f) {
  TheoremResult r = make("norm-nabla-p", "geometry", "|nabla P|^2 = <F, F> and vanishes iff F = 0");
  const Scalar norm = square_norm_nabla_P(fa, lc);
  expect(r, "|nabla P|^2 = g^ij g^ks g^lm F_ikl F_jsm", inner_product(f, f, fa.inverse_metric()), norm);
  if (norm.is_zero() != f.is_zero()) {
    r.conclusion_holds = false;
    r.witnesses.push_back({"|nabla P|^2 = 0 iff F = 0", {}, std::nullopt, norm});
  }
  r.details.push_back("|nabla P|^2 = " + to_string(norm, fa.params()));
  return r;
}

TheoremResult riemann_symmetries(const FrameAlgebra& fa, const Curvature& c) {
  TheoremResult r = make("riemann-symmetries", "geometry", "Levi-Civita curvature symmetries");
  const Tensor& rr = c.riemann;
  expect(r, "R(x,y,z,w) = -R(y,x,z,w)", -rr, permute(rr, {1, 0, 2, 3}));
  expect(r, "R(x,y,z,w) = -R(x,y,w,z)", -rr, permute(rr, {0, 1, 3, 2}));
  expect_zero(r, "S R(x,y,z,w) = 0", cyclic_sum(rr, {0, 1, 2}));
  expect(r, "R(x,y,z,w) = R(z,w,x,y)", rr, permute(rr, {2, 3, 0, 1}));
  expect(r, "rho(y,z) = rho(z,y)", c.ricci, permute(c.ricci, {1, 0}));
  r.details.push_back("tau = " + to_string(c.scalar, fa.params()));
  return r;
}

// ---- rpt suite

TheoremResult natural_connections(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("natural-connections", "rpt", "RPT, canonical and P-connection preserve P and g");
  for (const Connection* c : {&pack.rpt, &pack.canonical, &pack.p_conn}) absorb(r, natural_check(fa, *c));
  return r;
}

TheoremResult rpt_torsion_check(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("rpt-torsion", "rpt", "RPT torsion is a 3-form and Q = T/2");
  if (!is_skew(pack.T, {0, 1, 2})) {
    r.conclusion_holds = false;
    r.witnesses.push_back({"T is totally skew", {}, std::nullopt, Scalar(0)});
  }
  expect(r, "T(x,y) = nabla'_x y - nabla'_y x - [x,y]", pack.T, torsion(fa, pack.rpt));
  expect(r, "Q = T/2", pack.T * rational(1, 2), pack.Q);
  expect(r, "Q(x,y,z) = g(nabla'_x y - nabla_x y, z)", pack.Q, difference_tensor(fa, pack.nabla, pack.rpt));
  return r;
}

TheoremResult torsion_identities(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("torsion-identities", "rpt", "T against F under P");
  const PTwisted tp(pack.T, fa.product());
  const PTwisted fp(pack.F, fa.product());
  const std::vector<Variance> co3(3, Variance::Co);
  const std::size_t n = fa.dim();
  const Tensor a = Tensor::generate(n, co3, [&](const Index& v) {
    return tp(0b011, {v[0], v[1], v[2]}) - fp(0b100, {v[2], v[1], v[0]}) * Scalar(2);
  });
  const Tensor b = Tensor::generate(n, co3, [&](const Index& v) {
    return tp(0b101, {v[0], v[1], v[2]}) - fp(0b100, {v[1], v[0], v[2]}) * Scalar(2);
  });
  const Tensor c = Tensor::generate(n, co3, [&](const Index& v) {
    return tp(0b110, {v[0], v[1], v[2]}) - fp(0b010, {v[0], v[1], v[2]}) * Scalar(2);
  });
  expect(r, "T(x,y,z) = T(Px,Py,z) - 2F(z,y,Px)", pack.T, a);
  expect(r, "T(x,y,z) = T(Px,y,Pz) - 2F(y,x,Pz)", pack.T, b);
  expect(r, "T(x,y,z) = T(x,Py,Pz) - 2F(x,Py,z)", pack.T, c);
  return r;
}

TheoremResult q_cyclic(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("q-cyclic", "rpt", "Q(x,y,Pz) = Q(y,Pz,x)");
  const PTwisted qp(pack.Q, fa.product());
  const Tensor lhs = qp.variant(0b100);
  const Tensor rhs = Tensor::generate(fa.dim(), std::vector<Variance>(3, Variance::Co),
                                      [&](const Index& v) { return qp(0b010, {v[1], v[2], v[0]}); });
  expect(r, "Q(x,y,Pz) = Q(y,Pz,x)", lhs, rhs);
  return r;
}

TheoremResult natural_differences(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("natural-differences", "rpt",
                         "F(x,y,z) = Q(x,y,Pz) - Q(x,Py,z) and Q(x,y,z) = -Q(x,z,y)");
  const Matrix& p = fa.product();
  using Named = std::pair<std::string, const Tensor*>;
  for (const auto& [name, q] : std::initializer_list<Named>{{"Q", &pack.Q}, {"Q^C", &pack.Q_C}, {"Q^P", &pack.Q_P}}) {
    expect(r, name + ": F(x,y,z) = Q(x,y,Pz) - Q(x,Py,z)", pack.F,
           apply_endomorphism(*q, 2, p) - apply_endomorphism(*q, 1, p));
    expect(r, name + ": Q(x,y,z) = -Q(x,z,y)", -*q, permute(*q, {0, 2, 1}));
  }
  return r;
}

TheoremResult average_connection(const ConnectionPack& pack) {
  TheoremResult r = make("average-connection", "rpt", "P-connection is the mean of canonical and RPT");
  expect(r, "Q^P = 1/2 (Q^C + Q)", (pack.Q_C + pack.Q) * rational(1, 2), pack.Q_P);
  expect(r, "nabla^P = 1/2 (nabla^C + nabla')",
         (pack.canonical.coefficients + pack.rpt.coefficients) * rational(1, 2), pack.p_conn.coefficients);
  return r;
}

TheoremResult sigma_form(const RptData& d) {
  TheoremResult r = make("sigma-form", "rpt", "sigma^T is a 4-form");
  expect(r, "sigma is totally skew", d.sigma, alternate(d.sigma, {0, 1, 2, 3}));
  expect(r, "sigma(x,y,z,w) = sigma(z,w,x,y)", d.sigma, permute(d.sigma, {2, 3, 0, 1}));
  expect(r, "S sigma(x,y,z,w) = 3 sigma(x,y,z,w)", d.sigma * Scalar(3), cyclic_sum(d.sigma, {0, 1, 2}));
  return r;
}

TheoremResult exterior_derivative(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("torsion-exterior-derivative", "rpt", "dT is a 4-form");
  const Tensor dt = exterior_derivative_torsion(fa, pack.rpt, pack.T);
  expect(r, "dT is totally skew", dt, alternate(dt, {0, 1, 2, 3}));
  r.details.push_back("dT = 0: " + yes_no(dt.is_zero()));
  return r;
}

TheoremResult cyclic_curvature(const RptData& d) {
  TheoremResult r = make("cyclic-curvature-rpt", "rpt", "S R' = S nabla'T + sigma");
  expect(r, "S R'(x,y,z,w) = S (nabla'_x T)(y,z,w) + sigma(x,y,z,w)",
         cyclic_sum(d.nt, {0, 1, 2}) + d.sigma, cyclic_sum(d.r_prime.riemann, {0, 1, 2}));
  return r;
}

// ---- theorems suite, general frames

TheoremResult rpt_existence(const FrameAlgebra& fa, const ClassLabel& label,
                            const std::optional<ConnectionPack>& pack) {
  TheoremResult r = make("rpt-existence", "theorems", "an RPT-connection exists exactly on W3");
  const bool w3 = label.cyclic_sum_zero;
  if (w3 != pack.has_value()) {
    r.conclusion_holds = false;
    r.witnesses.push_back({pack ? "RPT-connection built outside W3" : "RPT-connection refused on a W3 frame", {},
                           std::nullopt, Scalar(0)});
    return r;
  }
  if (pack) {
    absorb(r, natural_check(fa, pack->rpt));
    if (!is_skew(pack->T, {0, 1, 2})) {
      r.conclusion_holds = false;
      r.witnesses.push_back({"torsion is totally skew", {}, std::nullopt, Scalar(0)});
    }
    r.details.push_back("W3 frame: RPT-connection constructed");
  } else {
    r.details.push_back("cyclic sum of F is nonzero: construction refused");
  }
  return r;
}

TheoremResult natural_torsion_type(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("natural-torsion-type", "theorems",
                         "torsions of the implemented natural connections have p1 = 0 and p3 != 0");
  require_strict(r, pack);
  for (const Connection* c : {&pack.rpt, &pack.canonical, &pack.p_conn}) {
    const TorsionProjections p = torsion_projections(torsion(fa, *c), fa);
    expect_zero(r, c->name + ": p1 = 0", p.p1);
    expect_nonzero(r, c->name + ": p3 != 0", p.p3);
  }
  r.details.push_back("checked for the RPT, canonical and P-connection only");
  return r;
}

// ---- theorems suite, example family

Tensor bracket_with_p(const FrameAlgebra& fa, bool p_left, bool p_right, bool p_value) {
  Tensor t = fa.structure();
  if (p_left) t = apply_endomorphism(t, 0, fa.product());
  if (p_right) t = apply_endomorphism(t, 1, fa.product());
  if (p_value) t = apply_endomorphism(t, 2, fa.product());
  return t;
}

TheoremResult example_brackets(const FrameAlgebra& fa) {
  TheoremResult r = make("example-brackets", "theorems", "[PX,PY] + P[PX,Y] + P[X,PY] + [X,Y] = 0");
  expect_zero(r, "[PX_i,PX_j] + P[PX_i,X_j] + P[X_i,PX_j] + [X_i,X_j]",
              bracket_with_p(fa, true, true, false) + bracket_with_p(fa, true, false, true) +
                  bracket_with_p(fa, false, true, true) + fa.structure());
  return r;
}

TheoremResult example_shortcuts(const FrameAlgebra& fa, const ConnectionPack& pack) {
  TheoremResult r = make("example-shortcuts", "theorems", "bracket formulas for nabla, nabla P, T and nabla'");
  const Scalar half = rational(1, 2);
  expect(r, "2 nabla_X Y = [X,Y] + P[X,PY] - P[PX,Y]",
         (fa.structure() + bracket_with_p(fa, false, true, true) - bracket_with_p(fa, true, false, true)) * half,
         pack.nabla.coefficients);
  expect(r, "2 (nabla_X P) Y = -P[PX,PY] + [PX,Y]",
         (bracket_with_p(fa, true, false, false) - bracket_with_p(fa, true, true, true)) * half,
         nabla_P(fa, pack.nabla));
  expect(r, "T(X,Y) = -[PX,PY]", -bracket_with_p(fa, true, true, false), torsion_vector(fa, pack.rpt));
  expect(r, "nabla'_X Y = [X,Y] + P[X,PY]", fa.structure() + bracket_with_p(fa, false, true, true),
         pack.rpt.coefficients);
  return r;
}

Scalar lambda_square_sum(const std::array<Scalar, 4>& l) {
  return l[0] * l[0] + l[1] * l[1] + l[2] * l[2] + l[3] * l[3];
}

TheoremResult example_scalars(const FrameAlgebra& fa, const std::array<Scalar, 4>& lambda, const RptData& d) {
  TheoremResult r = make("example-scalars", "theorems", "tau, tau' and |nabla P|^2 on the example family");
  const Scalar s = lambda_square_sum(lambda);
  expect(r, "tau = -5/2 (l1^2 + l2^2 + l3^2 + l4^2)", s * rational(-5, 2), d.r.scalar);
  expect(r, "|nabla P|^2 = 4 (l1^2 + l2^2 + l3^2 + l4^2)", s * Scalar(4), d.norm);
  expect(r, "tau' = -4 (l1^2 + l2^2 + l3^2 + l4^2)", s * Scalar(-4), d.r_prime.scalar);
  (void)fa;
  return r;
}

TheoremResult strong_structure(const FrameAlgebra& fa, const ConnectionPack& pack, const RptData& d) {
  TheoremResult r = make("strong-structure", "theorems", "the example's torsion 3-form is closed");
  require_strict(r, pack);
  expect_zero(r, "dT = 0", exterior_derivative_torsion(fa, pack.rpt, pack.T));
  if (fa.dim() == 4) expect(r, "sigma(X1,X2,X3,X4) = 0", Scalar(0), d.sigma(0, 1, 2, 3));
  return r;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "geometry") return Suite::Geometry;
  if (name == "rpt") return Suite::Rpt;
  if (name == "theorems") return Suite::Theorems;
  throw std::invalid_argument("unknown suite '" + name + "' (expected all, geometry, rpt or theorems)");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::All:
      return "all";
    case Suite::Geometry:
      return "geometry";
    case Suite::Rpt:
      return "rpt";
    case Suite::Theorems:
      return "theorems";
  }
  return "?";
}

Status TheoremResult::status() const {
  if (!hypotheses_satisfied) return Status::Skip;
  return conclusion_holds ? Status::Pass : Status::Fail;
}

TheoremResult check_p_tensor(const Tensor& l, const FrameAlgebra& fa) {
  TheoremResult r = make("p-tensor", "theorems", "Riemannian P-tensor conditions");
  expect(r, "L(x,y,z,w) = -L(y,x,z,w)", -l, permute(l, {1, 0, 2, 3}));
  expect(r, "L(x,y,z,w) = -L(x,y,w,z)", -l, permute(l, {0, 1, 3, 2}));
  expect_zero(r, "S L(x,y,z,w) = 0", cyclic_sum(l, {0, 1, 2}));
  const Matrix& p = fa.product();
  expect(r, "L(x,y,Pz,Pw) = L(x,y,z,w)", l, apply_endomorphism(apply_endomorphism(l, 2, p), 3, p));
  return r;
}

TheoremResult verify_curvature_relation(const FrameAlgebra& fa, const ConnectionPack& pack) {
  return finalize(curvature_relation(fa, pack, RptData(fa, pack)));
}

TheoremResult verify_torsion_type(const FrameAlgebra& fa, const ConnectionPack& pack) {
  return finalize(torsion_type(fa, pack));
}

TheoremResult verify_p_tensor_curvature(const FrameAlgebra& fa, const ConnectionPack& pack) {
  return finalize(p_tensor_curvature(fa, pack, RptData(fa, pack)));
}

TheoremResult verify_parallel_torsion(const FrameAlgebra& fa, const ConnectionPack& pack) {
  return finalize(parallel_torsion(fa, pack, RptData(fa, pack)));
}

TheoremResult verify_example_equivalence(const std::array<Scalar, 4>& lambda, const ParamNames& params) {
  TheoremResult r = make("example-equivalence", "theorems",
                         "(i) R' is a P-tensor, (ii) T is parallel, (iii) l3 = e l1, l4 = e l2 with e = 1 or -1");
  const FrameAlgebra fa = build_example(ExampleSpec{params, lambda});
  const ConnectionPack pack = rpt_connection(fa);
  const TheoremResult p_tensor = check_p_tensor(curvature(fa, pack.rpt).riemann, fa);
  const Tensor nt = covariant_derivative(fa, pack.rpt, pack.T);

  const bool i = p_tensor.conclusion_holds;
  const bool ii = nt.is_zero();
  bool iii = false;
  for (int e : {1, -1})
    iii = iii || (lambda[2] == Scalar(e) * lambda[0] && lambda[3] == Scalar(e) * lambda[1]);

  r.evidence = p_tensor.witnesses;
  const auto nt_nonzero = nonzero("(nabla'_i T)_jks", nt);
  r.evidence.insert(r.evidence.end(), nt_nonzero.begin(), nt_nonzero.end());
  if (i == ii && ii == iii) {
    r.details.push_back("(i)=(ii)=(iii)=" + yes_no(i));
  } else {
    r.conclusion_holds = false;
    r.details.push_back("(i)=" + yes_no(i) + " (ii)=" + yes_no(ii) + " (iii)=" + yes_no(iii));
    r.witnesses = r.evidence;
  }
  if (f_is_zero(pack)) {
    r.hypotheses_satisfied = false;
    r.reason = "all lambda vanish: the frame is abelian and every condition holds vacuously";
  }
  return finalize(std::move(r));
}

std::vector<TheoremResult> run_all(const FrameAlgebra& fa, Suite suite) {
  const bool geometry = suite == Suite::All || suite == Suite::Geometry;
  const bool rpt = suite == Suite::All || suite == Suite::Rpt;
  const bool theorems = suite == Suite::All || suite == Suite::Theorems;
  std::vector<TheoremResult> out;

  const Connection lc = levi_civita(fa);
  const Tensor f = fundamental_F(fa, lc);
  const ClassLabel label = classify(fa);

  if (geometry) {
    out.push_back(structure_check(fa));
    out.push_back(killing_metric(fa));
    out.push_back(levi_civita_check(fa, lc));
    out.push_back(f_identities(fa, f));
    out.push_back(class_check(fa, f, label));
    out.push_back(nijenhuis_check(fa, lc, f));
    out.push_back(norm_check(fa, lc, f));
    out.push_back(riemann_symmetries(fa, curvature(fa, lc)));
  }
  if (!rpt && !theorems) return out;

  std::optional<ConnectionPack> pack;
  std::string refusal;
  try {
    pack = rpt_connection(fa);
  } catch (const NotW3& e) {
    refusal = e.what();
  }
  std::optional<RptData> data;
  if (pack) data.emplace(fa, *pack);

  // RPT-dependent checks become skips when the connection does not exist.
  auto skipped = [&](std::string id, std::string suite_name, std::string title) {
    TheoremResult r = make(std::move(id), std::move(suite_name), std::move(title));
    r.hypotheses_satisfied = false;
    r.conclusion_holds = false;
    r.reason = "NotW3: " + refusal;
    return r;
  };

  if (rpt) {
    if (pack) {
      out.push_back(natural_connections(fa, *pack));
      out.push_back(rpt_torsion_check(fa, *pack));
      out.push_back(torsion_identities(fa, *pack));
      out.push_back(q_cyclic(fa, *pack));
      out.push_back(natural_differences(fa, *pack));
      out.push_back(average_connection(*pack));
      out.push_back(sigma_form(*data));
      out.push_back(exterior_derivative(fa, *pack));
      out.push_back(cyclic_curvature(*data));
    } else {
      for (const char* id : {"natural-connections", "rpt-torsion", "torsion-identities", "q-cyclic",
                             "natural-differences", "average-connection", "sigma-form",
                             "torsion-exterior-derivative", "cyclic-curvature-rpt"})
        out.push_back(skipped(id, "rpt", "requires the RPT-connection"));
    }
  }

  if (theorems) {
    out.push_back(rpt_existence(fa, label, pack));
    if (pack) {
      out.push_back(natural_torsion_type(fa, *pack));
      out.push_back(curvature_relation(fa, *pack, *data));
      out.push_back(torsion_type(fa, *pack));
      out.push_back(p_tensor_curvature(fa, *pack, *data));
      out.push_back(parallel_torsion(fa, *pack, *data));
    } else {
      for (const char* id : {"natural-torsion-type", "curvature-relation", "torsion-type", "p-tensor-curvature",
                             "parallel-torsion"})
        out.push_back(skipped(id, "theorems", "requires the RPT-connection"));
    }

    const auto lambda = match_example(fa);
    if (lambda && pack) {
      out.push_back(example_brackets(fa));
      out.push_back(example_shortcuts(fa, *pack));
      out.push_back(example_scalars(fa, *lambda, *data));
      out.push_back(strong_structure(fa, *pack, *data));
      out.push_back(verify_example_equivalence(*lambda, fa.params()));
    } else {
      for (const char* id : {"example-brackets", "example-shortcuts", "example-scalars", "strong-structure",
                             "example-equivalence"}) {
        TheoremResult r = make(id, "theorems", "example family only");
        r.hypotheses_satisfied = false;
        r.conclusion_holds = false;
        r.reason = "frame is not a member of the example family";
        out.push_back(std::move(r));
      }
    }
  }
  for (auto& r : out) r = finalize(std::move(r));
  return out;
}

}  // namespace rptgeo
