#include "rptgeo/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace rptgeo {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void check_slot(const Tensor& t, std::size_t slot) {
  if (slot >= t.rank())
    throw TensorError("slot " + std::to_string(slot) + " out of range for rank " +
                      std::to_string(t.rank()));
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

Tensor::Tensor(std::size_t dim, std::vector<Variance> variance)
    : dim_(dim), variance_(std::move(variance)), c_(ipow(dim, variance_.size())) {}

Tensor Tensor::covariant(std::size_t dim, std::size_t rank) {
  return Tensor(dim, std::vector<Variance>(rank, Variance::Co));
}

std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
  if (idx.size() != rank()) throw TensorError("index arity does not match tensor rank");
  std::size_t flat = 0;
  for (auto i : idx) {
    if (i >= dim_) throw TensorError("frame index out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

Index Tensor::unflatten(std::size_t flat) const {
  Index idx(rank());
  for (std::size_t s = rank(); s-- > 0;) {
    idx[s] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

bool Tensor::increment(Index& idx) const {
  for (std::size_t s = idx.size(); s-- > 0;) {
    if (++idx[s] < dim_) return true;
    idx[s] = 0;
  }
  return false;
}

bool Tensor::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<Index> Tensor::first_nonzero() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return unflatten(i);
  return std::nullopt;
}

void Tensor::check_compatible(const Tensor& o) const {
  if (dim_ != o.dim_ || variance_ != o.variance_) throw TensorError("tensor shape mismatch");
}

Tensor Tensor::operator-() const {
  Tensor r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Tensor Tensor::substitute(const std::vector<Scalar>& values) const {
  Tensor r = *this;
  for (auto& c : r.c_) c = c.substitute(values);
  return r;
}

namespace {

Tensor contract_impl(const Tensor& t, std::size_t a, std::size_t b, const Matrix* pairing) {
  check_slot(t, a);
  check_slot(t, b);
  if (a == b) throw TensorError("contraction slots must be distinct");
  const bool same = t.variance()[a] == t.variance()[b];
  if (same && pairing == nullptr)
    throw TensorError("contracting two slots of equal variance needs a metric");
  if (pairing != nullptr && pairing->size() != t.dim()) throw TensorError("pairing size mismatch");

  std::vector<Variance> var;
  for (std::size_t s = 0; s < t.rank(); ++s)
    if (s != a && s != b) var.push_back(t.variance()[s]);

  const std::size_t n = t.dim();
  return Tensor::generate(n, std::move(var), [&](const Index& out) {
    Index full(t.rank());
    for (std::size_t s = 0, k = 0; s < t.rank(); ++s)
      if (s != a && s != b) full[s] = out[k++];
    Scalar sum;
    for (std::size_t m = 0; m < n; ++m) {
      full[a] = m;
      if (pairing == nullptr || !same) {
        full[b] = m;
        sum += t.at(full);
        continue;
      }
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar& w = (*pairing)(m, l);
        if (w.is_zero()) continue;
        full[b] = l;
        sum += w * t.at(full);
      }
    }
    return sum;
  });
}

}  // namespace

Tensor contract(const Tensor& t, std::size_t a, std::size_t b) {
  return contract_impl(t, a, b, nullptr);
}

Tensor contract(const Tensor& t, std::size_t a, std::size_t b, const Matrix& pairing) {
  return contract_impl(t, a, b, &pairing);
}

Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.rank()) throw TensorError("permutation arity mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw TensorError("not a permutation");
    seen[p] = true;
  }
  std::vector<Variance> var(t.rank());
  for (std::size_t s = 0; s < perm.size(); ++s) var[perm[s]] = t.variance()[s];
  Index src(t.rank());
  return Tensor::generate(t.dim(), std::move(var), [&](const Index& idx) {
    for (std::size_t s = 0; s < perm.size(); ++s) src[s] = idx[perm[s]];
    return t.at(src);
  });
}

Tensor cyclic_sum(const Tensor& t, const std::array<std::size_t, 3>& slots) {
  for (auto s : slots) check_slot(t, s);
  if (slots[0] == slots[1] || slots[1] == slots[2] || slots[0] == slots[2])
    throw TensorError("cyclic sum needs three distinct slots");
  const auto& v = t.variance();
  if (v[slots[0]] != v[slots[1]] || v[slots[1]] != v[slots[2]])
    throw TensorError("cyclic sum over slots of different variance");
  Index j(t.rank());
  return Tensor::generate(t.dim(), v, [&](const Index& idx) {
    const std::size_t x = idx[slots[0]], y = idx[slots[1]], z = idx[slots[2]];
    Scalar sum = t.at(idx);
    j = idx;
    j[slots[0]] = y;
    j[slots[1]] = z;
    j[slots[2]] = x;
    sum += t.at(j);
    j[slots[0]] = z;
    j[slots[1]] = x;
    j[slots[2]] = y;
    sum += t.at(j);
    return sum;
  });
}

Tensor alternate(const Tensor& t, const std::vector<std::size_t>& slots) {
  for (auto s : slots) check_slot(t, s);
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t k = i + 1; k < slots.size(); ++k) {
      if (slots[i] == slots[k]) throw TensorError("alternation slots must be distinct");
      if (t.variance()[slots[i]] != t.variance()[slots[k]])
        throw TensorError("alternation over slots of different variance");
    }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<int> signs;
  std::vector<std::size_t> p(slots.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
    signs.push_back(permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
  const Scalar norm = Scalar(1) / Scalar(static_cast<long>(perms.size()));

  Index j(t.rank());
  return Tensor::generate(t.dim(), t.variance(), [&](const Index& idx) {
    Scalar sum;
    for (std::size_t q = 0; q < perms.size(); ++q) {
      j = idx;
      for (std::size_t k = 0; k < slots.size(); ++k) j[slots[k]] = idx[slots[perms[q][k]]];
      if (signs[q] > 0) {
        sum += t.at(j);
      } else {
        sum -= t.at(j);
      }
    }
    return sum * norm;
  });
}

Tensor apply_endomorphism(const Tensor& t, std::size_t slot, const Matrix& p) {
  check_slot(t, slot);
  if (p.size() != t.dim()) throw TensorError("endomorphism size mismatch");
  const bool co = t.variance()[slot] == Variance::Co;
  Index j(t.rank());
  return Tensor::generate(t.dim(), t.variance(), [&](const Index& idx) {
    Scalar sum;
    j = idx;
    for (std::size_t m = 0; m < t.dim(); ++m) {
      const Scalar& w = co ? p(m, idx[slot]) : p(idx[slot], m);
      if (w.is_zero()) continue;
      j[slot] = m;
      sum += w * t.at(j);
    }
    return sum;
  });
}

Tensor lower(const Tensor& t, std::size_t slot, const Matrix& g) {
  check_slot(t, slot);
  if (t.variance()[slot] != Variance::Contra) throw TensorError("lower: slot is not contravariant");
  std::vector<Variance> var = t.variance();
  var[slot] = Variance::Co;
  Index j(t.rank());
  return Tensor::generate(t.dim(), std::move(var), [&](const Index& idx) {
    Scalar sum;
    j = idx;
    for (std::size_t m = 0; m < t.dim(); ++m) {
      if (g(m, idx[slot]).is_zero()) continue;
      j[slot] = m;
      sum += t.at(j) * g(m, idx[slot]);
    }
    return sum;
  });
}

Tensor raise(const Tensor& t, std::size_t slot, const Matrix& g_inverse) {
  check_slot(t, slot);
  if (t.variance()[slot] != Variance::Co) throw TensorError("raise: slot is not covariant");
  std::vector<Variance> var = t.variance();
  var[slot] = Variance::Contra;
  Index j(t.rank());
  return Tensor::generate(t.dim(), std::move(var), [&](const Index& idx) {
    Scalar sum;
    j = idx;
    for (std::size_t m = 0; m < t.dim(); ++m) {
      if (g_inverse(idx[slot], m).is_zero()) continue;
      j[slot] = m;
      sum += g_inverse(idx[slot], m) * t.at(j);
    }
    return sum;
  });
}

Scalar inner_product(const Tensor& a, const Tensor& b, const Matrix& g_inverse) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) throw TensorError("inner product shape mismatch");
  for (std::size_t s = 0; s < a.rank(); ++s)
    if (a.variance()[s] != Variance::Co || b.variance()[s] != Variance::Co)
      throw TensorError("inner product expects covariant tensors");
  Tensor raised = b;
  for (std::size_t s = 0; s < b.rank(); ++s) raised = raise(raised, s, g_inverse);
  Scalar sum;
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    if (a.components()[i].is_zero() || raised.components()[i].is_zero()) continue;
    sum += a.components()[i] * raised.components()[i];
  }
  return sum;
}

bool is_skew(const Tensor& t, const std::vector<std::size_t>& slots) {
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t k = i + 1; k < slots.size(); ++k) {
      std::vector<std::size_t> perm(t.rank());
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[slots[i]], perm[slots[k]]);
      if (!(permute(t, perm) == -t)) return false;
    }
  return true;
}

}  // namespace rptgeo
