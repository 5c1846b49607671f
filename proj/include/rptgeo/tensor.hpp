#pragma once

#include "rptgeo/matrix.hpp"
#include "rptgeo/scalar.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rptgeo {

enum class Variance { Contra, Co };

using Index = std::vector<std::size_t>;

class TensorError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Dense multi-index array of Scalars over a dim-dimensional frame.
/// Slots and frame indices are 0-based; slot 0 varies slowest.
class Tensor {
public:
  Tensor() = default;
  Tensor(std::size_t dim, std::vector<Variance> variance);

  /// All-covariant tensor of the given rank.
  static Tensor covariant(std::size_t dim, std::size_t rank);

  /// Fills every component from f(const Index&).
  template <class F>
  static Tensor generate(std::size_t dim, std::vector<Variance> variance, F&& f) {
    Tensor t(dim, std::move(variance));
    Index idx(t.rank(), 0);
    for (std::size_t flat = 0; flat < t.c_.size(); ++flat) {
      t.c_[flat] = f(static_cast<const Index&>(idx));
      t.increment(idx);
    }
    return t;
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return variance_.size(); }
  const std::vector<Variance>& variance() const { return variance_; }
  const std::vector<Scalar>& components() const { return c_; }

  std::size_t offset(std::span<const std::size_t> idx) const;
  Index unflatten(std::size_t flat) const;

  const Scalar& at(std::span<const std::size_t> idx) const { return c_[offset(idx)]; }
  Scalar& at(std::span<const std::size_t> idx) { return c_[offset(idx)]; }
  const Scalar& at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  Scalar& at(std::initializer_list<std::size_t> idx) {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  template <class... I>
  const Scalar& operator()(I... i) const {
    const std::array<std::size_t, sizeof...(I)> idx{static_cast<std::size_t>(i)...};
    return at(std::span<const std::size_t>(idx));
  }
  template <class... I>
  Scalar& operator()(I... i) {
    const std::array<std::size_t, sizeof...(I)> idx{static_cast<std::size_t>(i)...};
    return at(std::span<const std::size_t>(idx));
  }

  bool is_zero() const;
  /// The first nonzero component's index, if any.
  std::optional<Index> first_nonzero() const;

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) = default;

  Tensor substitute(const std::vector<Scalar>& values) const;

  /// Advances a multi-index in row-major order; returns false after the last.
  bool increment(Index& idx) const;

private:
  void check_compatible(const Tensor& o) const;

  std::size_t dim_ = 0;
  std::vector<Variance> variance_;
  std::vector<Scalar> c_;
};

/// Contracts slots a and b (rank drops by two). Slots of opposite variance
/// are traced directly.
Tensor contract(const Tensor& t, std::size_t a, std::size_t b);
/// Contracts two slots of equal variance through a pairing matrix: the
/// inverse metric for two covariant slots, the metric for two contravariant.
Tensor contract(const Tensor& t, std::size_t a, std::size_t b, const Matrix& pairing);

/// u(x_0, ..., x_{r-1}) = t(x_{perm[0]}, ..., x_{perm[r-1]}).
Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm);

/// Cyclic sum over three slots of equal variance:
/// t(..x..y..z..) + t(..y..z..x..) + t(..z..x..y..).
Tensor cyclic_sum(const Tensor& t, const std::array<std::size_t, 3>& slots);

/// Full antisymmetrization over the listed slots with 1/k! normalization.
Tensor alternate(const Tensor& t, const std::vector<std::size_t>& slots);

/// Feeds P into a covariant slot, u(..x..) = t(..Px..), or applies P to the
/// value of a contravariant slot.
Tensor apply_endomorphism(const Tensor& t, std::size_t slot, const Matrix& p);

/// Lowers a contravariant slot with g, or raises a covariant slot with g^{-1}.
Tensor lower(const Tensor& t, std::size_t slot, const Matrix& g);
Tensor raise(const Tensor& t, std::size_t slot, const Matrix& g_inverse);

/// Full contraction <a, b> with every covariant slot paired through
/// g_inverse; both tensors must be all-covariant of equal rank.
Scalar inner_product(const Tensor& a, const Tensor& b, const Matrix& g_inverse);

/// True when the tensor changes sign under every transposition of the listed slots.
bool is_skew(const Tensor& t, const std::vector<std::size_t>& slots);

}  // namespace rptgeo
