#include "rptgeo/rpt_connection.hpp"

#include "rptgeo/levi_civita.hpp"

namespace rptgeo {

namespace {

const std::vector<Variance> kCo3{Variance::Co, Variance::Co, Variance::Co};

}  // namespace

Tensor rpt_torsion(const Tensor& f, const FrameAlgebra& fa) {
  const PTwisted fp(f, fa.product());
  const Scalar half = Scalar(1) / Scalar(2);
  return Tensor::generate(fa.dim(), kCo3, [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2];
    return (fp(0b100, {x, y, z}) + fp(0b100, {y, z, x}) + fp(0b100, {z, x, y})) * half;
  });
}

Tensor canonical_difference(const Tensor& f, const FrameAlgebra& fa) {
  const PTwisted fp(f, fa.product());
  const Scalar quarter = Scalar(-1) / Scalar(4);
  return Tensor::generate(fa.dim(), kCo3, [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2];
    return (fp(0b010, {y, x, z}) - fp(0b001, {y, x, z}) + fp(0b010, {x, y, z}) * Scalar(2)) * quarter;
  });
}

Tensor p_connection_difference(const Tensor& f, const FrameAlgebra& fa) {
  return apply_endomorphism(f, 1, fa.product()) * (Scalar(-1) / Scalar(2));
}

ConnectionPack rpt_connection(const FrameAlgebra& fa) {
  Connection nabla = levi_civita(fa);
  Tensor f = fundamental_F(fa, nabla);
  if (!cyclic_sum(f, {0, 1, 2}).is_zero())
    throw NotW3("the cyclic sum of F is nonzero, so no RPT-connection exists");

  const Matrix& p = fa.product();
  const Tensor d = nabla_P(fa, nabla);
  const Tensor d_py = apply_endomorphism(d, 1, p);  // (nabla_x P) P y
  const Tensor d_px = apply_endomorphism(d, 0, p);  // (nabla_{Px} P) y
  const Scalar quarter = Scalar(-1) / Scalar(4);
  const Tensor q_vec = Tensor::generate(fa.dim(), {Variance::Co, Variance::Co, Variance::Contra},
                                        [&](const Index& v) {
                                          const std::size_t x = v[0], y = v[1], l = v[2];
                                          return (d_py(x, y, l) - d_px(x, y, l) - d_py(y, x, l) * Scalar(2)) *
                                                 quarter;
                                        });
  Tensor q = lower(q_vec, 2, fa.metric());
  Tensor t = rpt_torsion(f, fa);
  if (!(t == q * Scalar(2)))
    throw InternalInconsistency("difference tensor from nabla P disagrees with half the torsion");

  Tensor q_c = canonical_difference(f, fa);
  Tensor q_p = p_connection_difference(f, fa);
  Connection rpt = shift_connection(fa, nabla, q, "rpt");
  Connection canonical = shift_connection(fa, nabla, q_c, "canonical");
  Connection p_conn = shift_connection(fa, nabla, q_p, "p-connection");
  return ConnectionPack{std::move(nabla), std::move(rpt), std::move(canonical), std::move(p_conn),
                        std::move(f),     std::move(t),   std::move(q),         std::move(q_c),
                        std::move(q_p)};
}

Tensor covariant_derivative(const FrameAlgebra& fa, const Connection& conn, const Tensor& t) {
  for (Variance v : t.variance())
    if (v != Variance::Co) throw TensorError("covariant_derivative expects an all-covariant tensor");
  const std::size_t n = fa.dim();
  const std::size_t k = t.rank();
  return Tensor::generate(n, std::vector<Variance>(k + 1, Variance::Co), [&](const Index& v) {
    const std::size_t i = v[0];
    Index arg(v.begin() + 1, v.end());
    Scalar sum;
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t js = arg[s];
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar& a = conn(i, js, m);
        if (a.is_zero()) continue;
        arg[s] = m;
        sum -= a * t.at(arg);
      }
      arg[s] = js;
    }
    return sum;
  });
}

CheckReport natural_check(const FrameAlgebra& fa, const Connection& conn) {
  CheckReport r("natural connection (" + conn.name + ")");
  const Tensor dp = nabla_P(fa, conn);
  if (auto at = dp.first_nonzero()) {
    Index shown = *at;
    for (auto& i : shown) ++i;
    r.fail({"(nabla_i P) e_j = 0", shown, Scalar(0), dp.at(*at)});
  }
  const std::size_t n = fa.dim();
  const Tensor g = Tensor::generate(n, {Variance::Co, Variance::Co},
                                    [&](const Index& v) { return fa.metric()(v[0], v[1]); });
  const Tensor dg = covariant_derivative(fa, conn, g);
  if (auto at = dg.first_nonzero()) {
    Index shown = *at;
    for (auto& i : shown) ++i;
    r.fail({"(nabla_i g)(e_j, e_k) = 0", shown, Scalar(0), dg.at(*at)});
  }
  return r;
}

Tensor torsion_pairing(const Tensor& t, const FrameAlgebra& fa) {
  const std::size_t n = fa.dim();
  const Tensor t_up = raise(t, 2, fa.inverse_metric());
  return Tensor::generate(n, std::vector<Variance>(4, Variance::Co), [&](const Index& v) {
    Scalar sum;
    for (std::size_t a = 0; a < n; ++a) {
      const Scalar& u = t_up(v[0], v[1], a);
      if (!u.is_zero()) sum += u * t(v[2], v[3], a);
    }
    return sum;
  });
}

Tensor sigma_T(const Tensor& t, const FrameAlgebra& fa) {
  if (t.rank() != 3 || !is_skew(t, {0, 1, 2})) throw TensorError("sigma^T needs a totally skew (0,3) tensor");
  return cyclic_sum(torsion_pairing(t, fa), {0, 1, 2});
}

Tensor exterior_derivative_torsion(const FrameAlgebra& fa, const Connection& conn, const Tensor& t) {
  if (t.rank() != 3 || !is_skew(t, {0, 1, 2})) throw TensorError("dT needs a totally skew (0,3) tensor");
  if (!(torsion(fa, conn) == t)) throw std::invalid_argument("dT: the connection's torsion differs from T");
  const Tensor nt = covariant_derivative(fa, conn, t);
  return cyclic_sum(nt, {0, 1, 2}) - permute(nt, {3, 0, 1, 2}) + sigma_T(t, fa) * Scalar(2);
}

}  // namespace rptgeo
