#pragma once

#include "rptgeo/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rptgeo {

/// Names of the symbolic parameters, in variable-index order.
using ParamNames = std::vector<std::string>;

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact rational function numerator/denominator over Q[params].
///
/// Always canonical: the two polynomials are coprime, the denominator is
/// monic under graded-lex order, and zero is 0/1. Structural equality is
/// therefore mathematical equality. Variables are positional; names only
/// matter for parsing and printing.
class Scalar {
public:
  Scalar() : den_(1) {}
  Scalar(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Throws DivisionByZero when den is zero.
  static Scalar fraction(Polynomial num, Polynomial den);
  static Scalar variable(std::size_t index) { return Scalar(Polynomial::variable(index)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// The rational value of a parameter-free Scalar.
  std::optional<Rational> constant_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DivisionByZero when o is zero.
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Scalar pow(unsigned e) const;

  /// Replaces variable i by values[i] for every variable present; throws
  /// DivisionByZero if the denominator vanishes after substitution.
  Scalar substitute(const std::vector<Scalar>& values) const;
  /// Full evaluation at rational parameter values.
  Rational evaluate(const std::vector<Rational>& values) const;

  /// One past the highest variable index in use.
  std::size_t width() const;

private:
  Scalar(Polynomial num, Polynomial den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  static Scalar canonical(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

/// Canonical printing: a polynomial prints via to_string(Polynomial); a true
/// rational function prints as (num)/(den).
std::string to_string(const Scalar& s, const ParamNames& names = {});

}  // namespace rptgeo
