#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace rptgeo::testing {
namespace {

std::vector<Variance> co(std::size_t rank) { return std::vector<Variance>(rank, Variance::Co); }

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

Vec nabla(const Tensor& a, const Vec& u, const Vec& v) {
  const std::size_t n = u.size();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * a(i, j, k);
    }
  }
  return out;
}

}  // namespace

Vec basis_vector(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

Vec act(const Matrix& m, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Vec bracket(const FrameAlgebra& fa, const Vec& u, const Vec& v) {
  const std::size_t n = fa.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * fa.c(i, j, k);
    }
  }
  return out;
}

Scalar pair(const Matrix& g, const Vec& u, const Vec& v) {
  Scalar s;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * g(i, j) * v[j];
  return s;
}

Vec scale(const Vec& v, const Scalar& s) {
  Vec out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<Index> jacobi_violations(const FrameAlgebra& fa) {
  const std::size_t n = fa.dim();
  std::vector<Index> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t r = 0; r < n; ++r) {
          Scalar sum;
          for (std::size_t s = 0; s < n; ++s)
            sum += fa.c(i, j, s) * fa.c(s, m, r) + fa.c(j, m, s) * fa.c(s, i, r) + fa.c(m, i, s) * fa.c(s, j, r);
          if (!sum.is_zero()) out.push_back({i + 1, j + 1, m + 1, r + 1});
        }
  return out;
}

std::vector<Index> killing_violations(const FrameAlgebra& fa) {
  const std::size_t n = fa.dim();
  const Matrix& g = fa.metric();
  const Matrix& p = fa.product();
  std::vector<Index> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
        const Scalar lhs = pair(g, bracket(fa, ei, ej), act(p, ek)) + pair(g, bracket(fa, ei, ek), act(p, ej));
        if (!lhs.is_zero()) out.push_back({i + 1, j + 1, k + 1});
      }
  return out;
}

Tensor levi_civita_shortcut(const FrameAlgebra& fa) {
  const std::size_t n = fa.dim();
  const Matrix& p = fa.product();
  Tensor a(n, {Variance::Co, Variance::Co, Variance::Contra});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ei = basis_vector(n, i), ej = basis_vector(n, j);
      Vec twice = bracket(fa, ei, ej);
      twice = add(twice, act(p, bracket(fa, ei, act(p, ej))));
      twice = add(twice, scale(act(p, bracket(fa, act(p, ei), ej)), -1));
      for (std::size_t k = 0; k < n; ++k) a(i, j, k) = twice[k] / Scalar(2);
    }
  return a;
}

Tensor nabla_p_shortcut(const FrameAlgebra& fa) {
  const std::size_t n = fa.dim();
  const Matrix& p = fa.product();
  Tensor out(n, {Variance::Co, Variance::Co, Variance::Contra});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec pei = act(p, basis_vector(n, i)), ej = basis_vector(n, j);
      const Vec twice = add(scale(act(p, bracket(fa, pei, act(p, ej))), -1), bracket(fa, pei, ej));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = twice[k] / Scalar(2);
    }
  return out;
}

bool is_torsion_free(const FrameAlgebra& fa, const Tensor& a) {
  const std::size_t n = fa.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(a(i, j, k) - a(j, i, k) - fa.c(i, j, k)).is_zero()) return false;
  return true;
}

bool is_metric(const FrameAlgebra& fa, const Tensor& a) {
  const std::size_t n = fa.dim();
  const Matrix& g = fa.metric();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ej = basis_vector(n, j), ek = basis_vector(n, k), ei = basis_vector(n, i);
        if (!(pair(g, nabla(a, ei, ej), ek) + pair(g, ej, nabla(a, ei, ek))).is_zero()) return false;
      }
  return true;
}

std::optional<Index> cyclic_sum_witness(const Tensor& f) {
  const std::size_t n = f.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!(f(x, y, z) + f(y, z, x) + f(z, x, y)).is_zero()) return Index{x + 1, y + 1, z + 1};
  return std::nullopt;
}

Tensor alternate_bruteforce(const Tensor& t, const std::vector<std::size_t>& slots) {
  std::vector<std::size_t> perm(slots.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  Tensor sum(t.dim(), t.variance());
  do {
    const int sign = permutation_sign(perm);
    Tensor term = Tensor::generate(t.dim(), t.variance(), [&](const Index& idx) {
      Index src = idx;
      for (std::size_t s = 0; s < slots.size(); ++s) src[slots[s]] = idx[slots[perm[s]]];
      return t.at(src);
    });
    sum += term * Scalar(sign);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * (Scalar(1) / Scalar(static_cast<long>(count)));
}

Tensor pairing_direct(const Tensor& t, const Matrix& g_inv) {
  const std::size_t n = t.dim();
  return Tensor::generate(n, co(4), [&](const Index& v) {
    Scalar s;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) s += t(v[0], v[1], a) * g_inv(a, b) * t(v[2], v[3], b);
    return s;
  });
}

Tensor sigma_direct(const Tensor& t, const Matrix& g_inv) {
  const Tensor p = pairing_direct(t, g_inv);
  return Tensor::generate(t.dim(), co(4), [&](const Index& v) {
    const std::size_t x = v[0], y = v[1], z = v[2], w = v[3];
    return p(x, y, z, w) + p(y, z, x, w) + p(z, x, y, w);
  });
}

Tensor exterior_derivative_direct(const FrameAlgebra& fa, const Tensor& w) {
  const std::size_t n = fa.dim();
  return Tensor::generate(n, co(4), [&](const Index& x) {
    Scalar s;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < 4; ++k)
          if (k != i && k != j) rest.push_back(x[k]);
        Scalar term;
        for (std::size_t m = 0; m < n; ++m) term += fa.c(x[i], x[j], m) * w(m, rest[0], rest[1]);
        s += ((i + j) % 2 == 0) ? term : -term;
      }
    return s;
  });
}

Tensor covariant_derivative_direct(const Tensor& a, const Tensor& t) {
  const std::size_t n = t.dim();
  return Tensor::generate(n, co(4), [&](const Index& v) {
    const std::size_t i = v[0], j = v[1], k = v[2], l = v[3];
    Scalar s;
    for (std::size_t m = 0; m < n; ++m)
      s -= a(i, j, m) * t(m, k, l) + a(i, k, m) * t(j, m, l) + a(i, l, m) * t(j, k, m);
    return s;
  });
}

Tensor riemann_direct(const FrameAlgebra& fa, const Tensor& a) {
  const std::size_t n = fa.dim();
  return Tensor::generate(n, co(4), [&](const Index& v) {
    const Vec x = basis_vector(n, v[0]), y = basis_vector(n, v[1]), z = basis_vector(n, v[2]);
    Vec r = nabla(a, x, nabla(a, y, z));
    r = add(r, scale(nabla(a, y, nabla(a, x, z)), -1));
    r = add(r, scale(nabla(a, bracket(fa, x, y), z), -1));
    return pair(fa.metric(), r, basis_vector(n, v[3]));
  });
}

bool first_bianchi_holds(const Tensor& l) {
  const std::size_t n = l.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w)
          if (!(l(x, y, z, w) + l(y, z, x, w) + l(z, x, y, w)).is_zero()) return false;
  return true;
}

}  // namespace rptgeo::testing
