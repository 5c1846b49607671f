#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rptgeo {

using Rational = mpq_class;

/// Exponent vector over the parameter list. Trailing zero exponents are
/// never stored, so equal monomials have equal representations.
class Monomial {
public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned degree() const;
  unsigned exponent(std::size_t index) const;
  /// One past the highest variable index with a nonzero exponent.
  std::size_t width() const { return exps_.size(); }
  bool is_one() const { return exps_.empty(); }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;

  /// Graded lexicographic order: total degree first, then the exponent of
  /// the lowest-indexed variable decides.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
  void trim();
  std::vector<std::uint16_t> exps_;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Multivariate polynomial with rational coefficients. Terms are kept sorted
/// in strictly decreasing graded-lex order with no zero coefficients.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(long value);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& value);  // NOLINT(google-explicit-constructor)
  Polynomial(Monomial m, Rational c);

  static Polynomial variable(std::size_t index);
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }
  unsigned total_degree() const;
  std::size_t width() const;

  /// Degree in a single variable; 0 for the zero polynomial.
  unsigned degree_in(std::size_t var) const;
  /// Coefficients c_k with p = sum_k c_k * var^k; each c_k is free of var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  /// Smallest variable index occurring in the polynomial, or width() when constant.
  std::size_t lowest_variable() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial multiplied_by(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Scales so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  /// Returns (a / b) when b divides a exactly, otherwise throws std::domain_error.
  static Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

  /// Monic greatest common divisor over Q[x...]; gcd(0, 0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Monic gcd of all coefficients with respect to var.
  Polynomial content_in(std::size_t var) const;

  /// Evaluates with rational values for every variable up to width().
  Rational evaluate(const std::vector<Rational>& values) const;

private:
  std::vector<Term> terms_;
};

/// Prints with explicit '*' and '^', coefficients as p/q, terms in
/// decreasing graded-lex order. Variables without a name print as x<i+1>.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
std::string variable_name(std::size_t index, const std::vector<std::string>& names);

}  // namespace rptgeo
