#include "rptgeo/expression.hpp"

#include <algorithm>
#include <cctype>

namespace rptgeo {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error("column " + std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position) {}

namespace {

class Parser {
public:
  Parser(std::string_view text, const ParamNames& params) : text_(text), params_(params) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::Syntax) {
    throw ParseError(kind, pos_ + 1, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by a non-constant expression", ParseError::Kind::BadDivision);
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero", ParseError::Kind::BadDivision);
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected a nonnegative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || std::isalpha(static_cast<unsigned char>(text_[pos_]))))
        fail("malformed number");
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(params_.begin(), params_.end(), name);
      if (it == params_.end()) {
        pos_ = start;
        fail("unknown parameter '" + name + "'", ParseError::Kind::UnknownParameter);
      }
      return Scalar::variable(static_cast<std::size_t>(it - params_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ParamNames& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_expression(std::string_view text, const ParamNames& params) {
  return Parser(text, params).parse();
}

}  // namespace rptgeo
