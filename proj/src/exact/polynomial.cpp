#include "rptgeo/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace rptgeo {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  if (power == 0) return m;
  m.exps_.assign(index + 1, 0);
  m.exps_[index] = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

unsigned Monomial::exponent(std::size_t index) const {
  return index < exps_.size() ? exps_[index] : 0u;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    unsigned e = exponent(i) + other.exponent(i);
    if (e > std::numeric_limits<std::uint16_t>::max())
      throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  r.exps_ = exps_;
  for (std::size_t i = 0; i < other.exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.trim();
  return r;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t n = std::max(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

namespace {

using TermMap = std::map<Monomial, Rational, std::greater<>>;

std::vector<Term> to_terms(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back(Term{m, std::move(c)});
  return out;
}

}  // namespace

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back(Term{Monomial{}, Rational(value)});
}

Polynomial::Polynomial(const Rational& value) {
  if (sgn(value) != 0) terms_.push_back(Term{Monomial{}, value});
}

Polynomial::Polynomial(Monomial m, Rational c) {
  if (sgn(c) != 0) terms_.push_back(Term{std::move(m), std::move(c)});
}

Polynomial Polynomial::variable(std::size_t index) {
  return Polynomial(Monomial::variable(index), Rational(1));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) acc[t.monomial] += t.coefficient;
  Polynomial p;
  p.terms_ = to_terms(std::move(acc));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coefficient == 1;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Rational(0);
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0u : terms_.front().monomial.degree();
}

std::size_t Polynomial::width() const {
  std::size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.monomial.width());
  return w;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return d;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    const unsigned e = t.monomial.exponent(var);
    buckets[e].push_back(Term{t.monomial / Monomial::variable(var, e), t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

std::size_t Polynomial::lowest_variable() const {
  const std::size_t w = width();
  for (std::size_t v = 0; v < w; ++v)
    for (const auto& t : terms_)
      if (t.monomial.exponent(v) > 0) return v;
  return w;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back(Term{b[j].monomial, subtract ? Rational(-b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (sgn(c) != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  if (a.is_constant()) return b * a.terms_[0].coefficient;
  if (b.is_constant()) return a * b.terms_[0].coefficient;
  TermMap acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  Polynomial p;
  p.terms_ = to_terms(std::move(acc));
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  }
  return true;
}

Polynomial Polynomial::multiplied_by(const Monomial& m, const Rational& c) const {
  Polynomial r;
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the term order.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.is_constant()) return a * Rational(1 / b.leading_coefficient());
  const Term& lead = b.leading_term();
  std::vector<Term> quotient;
  Polynomial rem = a;
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!lead.monomial.divides(t.monomial))
      throw std::domain_error("polynomial division is not exact");
    Monomial qm = t.monomial / lead.monomial;
    Rational qc = t.coefficient / lead.coefficient;
    rem -= b.multiplied_by(qm, qc);
    quotient.push_back(Term{std::move(qm), std::move(qc)});
  }
  Polynomial q;
  q.terms_ = std::move(quotient);  // generated in decreasing order
  return q;
}

Polynomial Polynomial::content_in(std::size_t var) const {
  Polynomial g;
  for (const auto& c : coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

namespace {

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) { return p.coefficients_in(var).back(); }

// lc(b)^(deg a - deg b + 1) * a reduced modulo b in var; b must have positive degree in var.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const unsigned da = a.degree_in(var);
  if (da < db) return a;
  const Polynomial lcb = leading_coefficient_in(b, var);
  unsigned steps = da - db + 1;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const unsigned d = a.degree_in(var);
    const Polynomial lca = leading_coefficient_in(a, var);
    a = lcb * a - lca * b.multiplied_by(Monomial::variable(var, d - db), Rational(1));
    --steps;
  }
  return steps == 0 ? a : a * lcb.pow(steps);
}

// Scaled to be monic: over Q the rational content is a unit.
Polynomial primitive_part(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return Polynomial::divide_exact(p, p.content_in(var)).monic();
}

Polynomial monomial_gcd(const Monomial& m, const Polynomial& p) {
  std::vector<unsigned> exps(m.width());
  for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = m.exponent(v);
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = std::min(exps[v], t.monomial.exponent(v));
  Monomial r;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (exps[v] > 0) r = r * Monomial::variable(v, exps[v]);
  return Polynomial(r, Rational(1));
}

// Dense coefficients in var after fixing every other variable at point[v].
std::vector<Rational> specialize(const Polynomial& p, std::size_t var, const std::vector<Rational>& point) {
  std::vector<Rational> dense(p.degree_in(var) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    for (std::size_t v = 0; v < t.monomial.width(); ++v) {
      if (v == var) continue;
      for (unsigned k = 0; k < t.monomial.exponent(v); ++k) c *= point[v];
    }
    dense[t.monomial.exponent(var)] += c;
  }
  while (!dense.empty() && sgn(dense.back()) == 0) dense.pop_back();
  return dense;
}

// Degree of the gcd of two dense univariate polynomials over Q (Euclid).
std::size_t univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const Rational q = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
      a.pop_back();
      while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Upper bound on the degree in var of gcd(a, b). At a point where both
// leading coefficients survive, the image of the gcd divides the gcd of the
// images and keeps its degree, so the image degree bounds it from above.
unsigned gcd_degree_bound(const Polynomial& a, const Polynomial& b, std::size_t var) {
  unsigned best = std::min(a.degree_in(var), b.degree_in(var));
  const std::size_t width = std::max(a.width(), b.width());
  static constexpr long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long attempt = 0; attempt < 3 && best > 0; ++attempt) {
    std::vector<Rational> point(width);
    for (std::size_t v = 0; v < width; ++v)
      point[v] = Rational(kPrimes[(v + 5 * attempt) % 12] * (attempt + 1) + static_cast<long>(v), 1 + attempt);
    const auto ua = specialize(a, var, point), ub = specialize(b, var, point);
    if (ua.size() != a.degree_in(var) + 1 || ub.size() != b.degree_in(var) + 1) continue;
    best = std::min<unsigned>(best, static_cast<unsigned>(univariate_gcd_degree(ua, ub)));
  }
  return best;
}

// Subresultant remainder sequence for primitive a, b with deg a >= deg b > 0 in var.
Polynomial subresultant_gcd(Polynomial a, Polynomial b, std::size_t var) {
  Polynomial g(1), h(1);
  for (;;) {
    const unsigned delta = a.degree_in(var) - b.degree_in(var);
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return primitive_part(b, var);
    if (r.degree_in(var) == 0) return Polynomial(1);
    a = std::move(b);
    b = Polynomial::divide_exact(r, g * h.pow(delta));
    g = leading_coefficient_in(a, var);
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = Polynomial::divide_exact(g.pow(delta), h.pow(delta - 1));
  }
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();
  if (a.terms().size() == 1) return monomial_gcd(a.leading_term().monomial, b);
  if (b.terms().size() == 1) return monomial_gcd(b.leading_term().monomial, a);

  const std::size_t var = std::min(a.lowest_variable(), b.lowest_variable());
  if (a.degree_in(var) == 0) return gcd(a, b.content_in(var));
  if (b.degree_in(var) == 0) return gcd(a.content_in(var), b);

  const Polynomial ca = a.content_in(var);
  const Polynomial cb = b.content_in(var);
  const Polynomial content = gcd(ca, cb);
  Polynomial pa = divide_exact(a, ca);
  Polynomial pb = divide_exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  const unsigned bound = gcd_degree_bound(pa, pb, var);
  if (bound == 0) return content;
  if (bound == pb.degree_in(var)) {
    try {
      divide_exact(pa, pb);
      return (content * pb).monic();
    } catch (const std::domain_error&) {
    }
  }
  return (content * subresultant_gcd(std::move(pa), std::move(pb), var)).monic();
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
  if (values.size() < width())
    throw std::invalid_argument("evaluate: missing values for some variables");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational prod = t.coefficient;
    for (std::size_t v = 0; v < t.monomial.width(); ++v) {
      const unsigned e = t.monomial.exponent(v);
      for (unsigned k = 0; k < e; ++k) prod *= values[v];
    }
    sum += prod;
  }
  return sum;
}

// ---------------------------------------------------------------- printing

std::string variable_name(std::size_t index, const std::vector<std::string>& names) {
  if (index < names.size()) return names[index];
  return "x" + std::to_string(index + 1);
}

namespace {

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < m.width(); ++v) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(v, names);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += monomial_string(t.monomial, names);
    }
  }
  return out;
}

}  // namespace rptgeo
