#include "rptgeo/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace rptgeo {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

bool Matrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_parameter_free() const {
  for (const auto& s : a_)
    if (!s.is_constant()) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Scalar Matrix::determinant() const {
  Matrix m = *this;
  Scalar det(1);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return Scalar{};
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n_; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

std::vector<Scalar> Matrix::leading_minors() const {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k <= n_; ++k) {
    Matrix sub(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
    out.push_back(sub.determinant());
  }
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  Matrix m = *this;
  Matrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar p = m(col, col);
    if (!(p == Scalar(1))) {
      for (std::size_t j = 0; j < n_; ++j) {
        m(col, j) /= p;
        inv(col, j) /= p;
      }
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= f * m(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::substitute(const std::vector<Scalar>& values) const {
  Matrix m(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].substitute(values);
  return m;
}

}  // namespace rptgeo
