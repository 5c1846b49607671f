#include "rptgeo/levi_civita.hpp"

namespace rptgeo {

namespace {

const std::vector<Variance> kCo3{Variance::Co, Variance::Co, Variance::Co};
const std::vector<Variance> kCoCoContra{Variance::Co, Variance::Co, Variance::Contra};

}  // namespace

PTwisted::PTwisted(const Tensor& t, const Matrix& p) {
  const std::size_t variants = std::size_t{1} << t.rank();
  variants_.reserve(variants);
  variants_.push_back(t);
  for (std::size_t mask = 1; mask < variants; ++mask) {
    // Reuse the variant without the highest set bit.
    std::size_t high = 0;
    while ((mask >> (high + 1)) != 0) ++high;
    variants_.push_back(apply_endomorphism(variants_[mask & ~(std::size_t{1} << high)], high, p));
  }
}

Connection levi_civita(const FrameAlgebra& fa) {
  const std::size_t n = fa.dim();
  const Matrix& g = fa.metric();
  const Matrix& g_inv = fa.inverse_metric();
  // cl(i,j,k) = g([e_i,e_j], e_k)
  const Tensor cl = lower(fa.structure(), 2, g);
  const Scalar half = Scalar(1) / Scalar(2);
  const Tensor koszul = Tensor::generate(n, kCo3, [&](const Index& x) {
    const std::size_t i = x[0], j = x[1], k = x[2];
    return (cl(i, j, k) + cl(k, i, j) + cl(k, j, i)) * half;
  });
  return Connection{"levi-civita", raise(koszul, 2, g_inv)};
}

Tensor nabla_P(const FrameAlgebra& fa, const Connection& conn) {
  const std::size_t n = fa.dim();
  const Matrix& p = fa.product();
  return Tensor::generate(n, kCoCoContra, [&](const Index& x) {
    const std::size_t i = x[0], j = x[1], l = x[2];
    Scalar sum;
    for (std::size_t m = 0; m < n; ++m) {
      if (!p(m, j).is_zero()) sum += conn(i, m, l) * p(m, j);
      if (!p(l, m).is_zero()) sum -= p(l, m) * conn(i, j, m);
    }
    return sum;
  });
}

CheckReport check_F_identities(const FrameAlgebra& fa, const Tensor& f) {
  CheckReport r("F identities");
  const PTwisted fp(f, fa.product());
  const std::size_t n = fa.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Index at{x + 1, y + 1, z + 1};
        const Scalar& v = f(x, y, z);
        if (!(v == f(x, z, y))) r.fail({"F(x,y,z) = F(x,z,y)", at, f(x, z, y), v});
        const Scalar twisted = -fp(0b110, {x, y, z});
        if (!(v == twisted)) r.fail({"F(x,y,z) = -F(x,Py,Pz)", at, twisted, v});
        const Scalar& a = fp(0b100, {x, y, z});
        const Scalar b = -fp(0b010, {x, y, z});
        if (!(a == b)) r.fail({"F(x,y,Pz) = -F(x,Py,z)", at, b, a});
      }
  return r;
}

Tensor fundamental_F(const FrameAlgebra& fa, const Connection& lc) {
  Tensor f = lower(nabla_P(fa, lc), 2, fa.metric());
  if (const CheckReport r = check_F_identities(fa, f); !r.passed)
    throw InternalInconsistency("F violates its defining identities: " + r.witnesses.front().what);
  return f;
}

Tensor nijenhuis(const FrameAlgebra& fa, const Connection& lc) {
  const Tensor d = nabla_P(fa, lc);
  const Tensor d_py = apply_endomorphism(d, 1, fa.product());  // (nabla_x P) P y
  const Tensor d_px = apply_endomorphism(d, 0, fa.product());  // (nabla_{Px} P) y
  return Tensor::generate(fa.dim(), kCoCoContra, [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], l = v[2];
    return d_py(x, y, l) - d_py(y, x, l) + d_px(x, y, l) - d_px(y, x, l);
  });
}

Scalar square_norm_nabla_P(const FrameAlgebra& fa, const Connection& lc) {
  const std::size_t n = fa.dim();
  const Matrix& g = fa.metric();
  const Matrix& g_inv = fa.inverse_metric();
  const Tensor d = nabla_P(fa, lc);
  // h(i,k,j,s) = g((nabla_i P) e_k, (nabla_j P) e_s)
  Scalar sum;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g_inv(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < n; ++s) {
          if (g_inv(k, s).is_zero()) continue;
          Scalar h;
          for (std::size_t l = 0; l < n; ++l) {
            if (d(i, k, l).is_zero()) continue;
            for (std::size_t m = 0; m < n; ++m)
              if (!g(l, m).is_zero() && !d(j, s, m).is_zero()) h += d(i, k, l) * d(j, s, m) * g(l, m);
          }
          if (!h.is_zero()) sum += g_inv(i, j) * g_inv(k, s) * h;
        }
    }
  return sum;
}

Curvature curvature(const FrameAlgebra& fa, const Connection& conn) {
  const std::size_t n = fa.dim();
  const Tensor op = Tensor::generate(
      n, {Variance::Co, Variance::Co, Variance::Co, Variance::Contra}, [&](const Index& x) {
        const std::size_t i = x[0], j = x[1], k = x[2], s = x[3];
        Scalar sum;
        for (std::size_t m = 0; m < n; ++m) {
          if (!conn(j, k, m).is_zero() && !conn(i, m, s).is_zero()) sum += conn(j, k, m) * conn(i, m, s);
          if (!conn(i, k, m).is_zero() && !conn(j, m, s).is_zero()) sum -= conn(i, k, m) * conn(j, m, s);
          if (!fa.c(i, j, m).is_zero() && !conn(m, k, s).is_zero()) sum -= fa.c(i, j, m) * conn(m, k, s);
        }
        return sum;
      });
  Curvature out;
  out.riemann = lower(op, 3, fa.metric());
  out.ricci = contract(out.riemann, 0, 3, fa.inverse_metric());
  out.scalar = contract(out.ricci, 0, 1, fa.inverse_metric()).components().front();
  return out;
}

std::string to_string(ManifoldClass c) {
  switch (c) {
    case ManifoldClass::W0:
      return "W0";
    case ManifoldClass::W3Strict:
      return "W3-strict";
    case ManifoldClass::Outside:
      return "outside-implemented-classes";
  }
  return "?";
}

ClassLabel classify(const FrameAlgebra& fa) {
  const Tensor f = fundamental_F(fa, levi_civita(fa));
  ClassLabel label{};
  label.f_zero = f.is_zero();
  label.cyclic_sum_zero = cyclic_sum(f, {0, 1, 2}).is_zero();
  if (label.f_zero) {
    label.kind = ManifoldClass::W0;
  } else if (label.cyclic_sum_zero) {
    label.kind = ManifoldClass::W3Strict;
  } else {
    label.kind = ManifoldClass::Outside;
  }
  return label;
}

TorsionProjections torsion_projections(const Tensor& t, const FrameAlgebra& fa) {
  if (t.rank() != 3 || t.dim() != fa.dim() || t.variance() != kCo3)
    throw TensorError("torsion projections need a (0,3) tensor on the frame");
  if (!(permute(t, {1, 0, 2}) == -t))
    throw TensorError("torsion projections need a tensor antisymmetric in its first two slots");

  const PTwisted tp(t, fa.product());
  // Slot masks: bit 0 = first argument carries P, bit 1 = second, bit 2 = third.
  constexpr unsigned kNone = 0b000, kFirst = 0b001, kSecond = 0b010, kThird = 0b100;
  const Scalar eighth = Scalar(1) / Scalar(8);
  const Scalar quarter = Scalar(1) / Scalar(4);
  const std::size_t n = fa.dim();

  TorsionProjections out;
  // Shared part of p1 and p2 with the sign pattern of p2.
  const Tensor mixed = Tensor::generate(n, kCo3, [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2];
    return tp(kNone, {y, z, x}) + tp(kNone, {z, x, y})           // T(y,z,x) + T(z,x,y)
           + tp(kFirst | kThird, {z, x, y})                        // + T(Pz,x,Py)
           - tp(kFirst | kThird, {y, z, x})                        // - T(Py,z,Px)
           - tp(kSecond | kThird, {z, x, y})                       // - T(z,Px,Py)
           - tp(kFirst | kSecond, {y, z, x})                       // - T(Py,Pz,x)
           - tp(kFirst | kSecond, {z, x, y})                       // - T(Pz,Px,y)
           + tp(kSecond | kThird, {y, z, x});                      // + T(y,Pz,Px)
  });
  const Tensor base = Tensor::generate(n, kCo3, [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2];
    return tp(kNone, {x, y, z}) * Scalar(2) - tp(kFirst | kSecond, {x, y, z}) * Scalar(2);
  });
  out.p1 = (base - mixed) * eighth;
  out.p2 = (base + mixed) * eighth;
  out.p3 = Tensor::generate(n, kCo3, [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2];
    return (tp(kNone, {x, y, z}) + tp(kFirst | kSecond, {x, y, z}) - tp(kFirst | kThird, {x, y, z}) -
            tp(kSecond | kThird, {x, y, z})) *
           quarter;
  });
  out.p4 = Tensor::generate(n, kCo3, [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2];
    return (tp(kNone, {x, y, z}) + tp(kFirst | kSecond, {x, y, z}) + tp(kFirst | kThird, {x, y, z}) +
            tp(kSecond | kThird, {x, y, z})) *
           quarter;
  });
  return out;
}

}  // namespace rptgeo
