#include "rptgeo/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace rptgeo {

Scalar Scalar::canonical(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("division by a zero scalar");
  if (num.is_zero()) return Scalar{};
  if (den.is_constant()) {
    Rational inv = 1 / den.leading_coefficient();
    return Scalar(num * inv, Polynomial(1), true);
  }
  Polynomial g = Polynomial::gcd(num, den);
  if (!g.is_one()) {
    num = Polynomial::divide_exact(num, g);
    den = Polynomial::divide_exact(den, g);
  }
  Rational inv = 1 / den.leading_coefficient();
  num *= inv;
  den *= inv;
  return Scalar(std::move(num), std::move(den), true);
}

Scalar Scalar::fraction(Polynomial num, Polynomial den) {
  return canonical(std::move(num), std::move(den));
}

std::optional<Rational> Scalar::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_term();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Polynomial n = num_ + o.num_;
    *this = den_.is_one() ? Scalar(std::move(n)) : canonical(std::move(n), den_);
    return *this;
  }
  *this = canonical(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar{};
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  *this = canonical(num_ * o.num_, den_ * o.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by a zero scalar");
  *this = canonical(num_ * o.den_, den_ * o.num_);
  return *this;
}

Scalar Scalar::pow(unsigned e) const {
  return Scalar(num_.pow(e), den_.pow(e), true);
}

namespace {

Scalar substitute_poly(const Polynomial& p, const std::vector<Scalar>& values) {
  Scalar sum;
  for (const auto& t : p.terms()) {
    Scalar prod(t.coefficient);
    for (std::size_t v = 0; v < t.monomial.width(); ++v) {
      const unsigned e = t.monomial.exponent(v);
      if (e == 0) continue;
      if (v >= values.size()) {
        prod *= Scalar::variable(v).pow(e);
      } else {
        prod *= values[v].pow(e);
      }
    }
    sum += prod;
  }
  return sum;
}

}  // namespace

Scalar Scalar::substitute(const std::vector<Scalar>& values) const {
  Scalar n = substitute_poly(num_, values);
  if (den_.is_one()) return n;
  Scalar d = substitute_poly(den_, values);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
  return n / d;
}

Rational Scalar::evaluate(const std::vector<Rational>& values) const {
  Rational d = den_.evaluate(values);
  if (sgn(d) == 0) throw DivisionByZero("denominator vanishes at the evaluation point");
  return num_.evaluate(values) / d;
}

std::size_t Scalar::width() const { return std::max(num_.width(), den_.width()); }

std::string to_string(const Scalar& s, const ParamNames& names) {
  if (s.is_polynomial()) return to_string(s.numerator(), names);
  auto wrap = [&](const Polynomial& p) {
    std::string t = to_string(p, names);
    const bool atom = std::all_of(t.begin(), t.end(), [](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '^';
    });
    return atom ? t : "(" + t + ")";
  };
  return wrap(s.numerator()) + "/" + wrap(s.denominator());
}

}  // namespace rptgeo
