#include "rptgeo/frame_algebra.hpp"

#include <algorithm>
#include <set>

namespace rptgeo {

void CheckReport::fail(Witness w) {
  passed = false;
  const auto same = std::count_if(witnesses.begin(), witnesses.end(),
                                  [&](const Witness& x) { return x.what == w.what; });
  if (static_cast<std::size_t>(same) < kMaxWitnessesPerCondition) witnesses.push_back(std::move(w));
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& w : other.witnesses) fail(w);
  if (!other.passed) passed = false;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

namespace {

Index one_based(std::initializer_list<std::size_t> idx) {
  Index out;
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

FrameAlgebra::FrameAlgebra(ParamNames params, Tensor structure, Matrix metric, Matrix product)
    : dim_(metric.size()),
      params_(std::move(params)),
      c_(std::move(structure)),
      g_(std::move(metric)),
      p_(std::move(product)) {
  if (dim_ == 0 || dim_ % 2 != 0)
    throw StructureError("frame dimension must be a positive even integer, got " + std::to_string(dim_));
  if (p_.size() != dim_) throw StructureError("product matrix size differs from metric size");
  const std::vector<Variance> want{Variance::Co, Variance::Co, Variance::Contra};
  if (c_.dim() != dim_ || c_.variance() != want)
    throw StructureError("structure constants must be a (co, co, contra) tensor of the frame dimension");
  std::set<std::string> names(params_.begin(), params_.end());
  if (names.size() != params_.size()) throw StructureError("duplicate parameter names");
  g_inv_ = g_.inverse();
}

const Matrix& FrameAlgebra::inverse_metric() const {
  if (!g_inv_) throw SingularMetric("metric determinant is identically zero");
  return *g_inv_;
}

FrameAlgebra FrameAlgebra::substitute(const std::vector<Scalar>& values) const {
  return FrameAlgebra(params_, c_.substitute(values), g_.substitute(values), p_.substitute(values));
}

Tensor zero_structure(std::size_t dim) {
  return Tensor(dim, {Variance::Co, Variance::Co, Variance::Contra});
}

CheckReport validate(const FrameAlgebra& fa) {
  CheckReport r("validate");
  const std::size_t n = fa.dim();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(fa.c(i, j, k) == -fa.c(j, i, k)))
          r.fail({"bracket antisymmetry", one_based({i, j, k}), -fa.c(j, i, k), fa.c(i, j, k)});

  // S_{i,j,m} c^s_{ij} c^r_{sm}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t q = 0; q < n; ++q) {
          Scalar sum;
          for (std::size_t s = 0; s < n; ++s) {
            sum += fa.c(i, j, s) * fa.c(s, m, q);
            sum += fa.c(j, m, s) * fa.c(s, i, q);
            sum += fa.c(m, i, s) * fa.c(s, j, q);
          }
          if (!sum.is_zero()) r.fail({"jacobi", one_based({i, j, m, q}), Scalar{}, sum});
        }

  const Matrix& g = fa.metric();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(g(i, j) == g(j, i))) r.fail({"metric symmetry", one_based({i, j}), g(j, i), g(i, j)});

  if (!fa.metric_inverse()) r.fail({"det(g) != 0", {}, std::nullopt, g.determinant()});

  if (g.is_parameter_free()) {
    const auto minors = g.leading_minors();
    for (std::size_t k = 0; k < minors.size(); ++k) {
      auto v = minors[k].constant_value();
      if (!v || sgn(*v) <= 0) {
        r.fail({"positive definite (leading minor > 0)", {k + 1}, std::nullopt, minors[k]});
        break;
      }
    }
  } else {
    r.notes.push_back("positivity unverified (parametric)");
  }

  const Matrix& p = fa.product();
  const Matrix p2 = p * p;
  const Matrix id = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(p2(i, j) == id(i, j))) r.fail({"P^2 = I", one_based({i, j}), id(i, j), p2(i, j)});

  const Matrix pgp = p.transpose() * g * p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(pgp(i, j) == g(i, j))) r.fail({"g(Px, Py) = g(x, y)", one_based({i, j}), g(i, j), pgp(i, j)});

  const Scalar tr = p.trace();
  if (!tr.is_zero()) r.fail({"tr P = 0", {}, Scalar{}, tr});
  return r;
}

Matrix associated_metric(const FrameAlgebra& fa) { return fa.metric() * fa.product(); }

CheckReport killing_check(const FrameAlgebra& fa) {
  CheckReport r("killing");
  const std::size_t n = fa.dim();
  const Matrix gp = associated_metric(fa);
  // K(i,j,k) = g([e_i,e_j], P e_k)
  const Tensor k = Tensor::generate(n, std::vector<Variance>(3, Variance::Co), [&](const Index& idx) {
    Scalar sum;
    for (std::size_t m = 0; m < n; ++m)
      if (!fa.c(idx[0], idx[1], m).is_zero()) sum += fa.c(idx[0], idx[1], m) * gp(m, idx[2]);
    return sum;
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Scalar v = k(i, j, l) + k(i, l, j);
        if (!v.is_zero()) r.fail({"g([x,y],Pz) + g([x,z],Py) = 0", one_based({i, j, l}), Scalar{}, v});
      }
  return r;
}

FrameAlgebra change_basis(const FrameAlgebra& fa, const Matrix& basis) {
  const std::size_t n = fa.dim();
  if (basis.size() != n) throw StructureError("basis matrix size mismatch");
  auto inv = basis.inverse();
  if (!inv) throw StructureError("basis matrix is singular");
  Tensor c = zero_structure(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // [f_a, f_b] in the old basis
      std::vector<Scalar> v(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (basis(i, a).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (basis(j, b).is_zero()) continue;
          const Scalar w = basis(i, a) * basis(j, b);
          for (std::size_t k = 0; k < n; ++k)
            if (!fa.c(i, j, k).is_zero()) v[k] += w * fa.c(i, j, k);
        }
      }
      for (std::size_t q = 0; q < n; ++q) {
        Scalar s;
        for (std::size_t k = 0; k < n; ++k)
          if (!v[k].is_zero()) s += (*inv)(q, k) * v[k];
        c(a, b, q) = s;
      }
    }
  return FrameAlgebra(fa.params(), std::move(c), basis.transpose() * fa.metric() * basis,
                      *inv * fa.product() * basis);
}

FrameAlgebra direct_sum(const FrameAlgebra& a, const FrameAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  ParamNames params = a.params();
  params.insert(params.end(), b.params().begin(), b.params().end());
  std::vector<Scalar> shift;
  for (std::size_t v = 0; v < b.params().size(); ++v) shift.push_back(Scalar::variable(v + a.params().size()));
  const FrameAlgebra bs = b.substitute(shift);

  Tensor c = zero_structure(n);
  Matrix g(n), p(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      g(i, j) = a.metric()(i, j);
      p(i, j) = a.product()(i, j);
      for (std::size_t k = 0; k < na; ++k) c(i, j, k) = a.c(i, j, k);
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      g(na + i, na + j) = bs.metric()(i, j);
      p(na + i, na + j) = bs.product()(i, j);
      for (std::size_t k = 0; k < nb; ++k) c(na + i, na + j, na + k) = bs.c(i, j, k);
    }
  }
  return FrameAlgebra(std::move(params), std::move(c), std::move(g), std::move(p));
}

}  // namespace rptgeo
