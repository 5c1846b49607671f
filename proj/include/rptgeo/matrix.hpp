#pragma once

#include "rptgeo/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rptgeo {

/// Square matrix of Scalars, row-major. For an endomorphism P of the frame,
/// column j holds the components of P e_j: P e_j = sum_i P(i, j) e_i.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  bool is_symmetric() const;
  bool is_parameter_free() const;
  Scalar trace() const;
  Scalar determinant() const;
  /// Leading principal minors of orders 1..n.
  std::vector<Scalar> leading_minors() const;
  /// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
  std::optional<Matrix> inverse() const;

  Matrix substitute(const std::vector<Scalar>& values) const;

private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace rptgeo
