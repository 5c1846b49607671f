#pragma once

#include "rptgeo/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rptgeo {

/// Raised for malformed expressions. position() is a 1-based column.
class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, UnknownParameter, BadDivision };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

private:
  Kind kind_;
  std::size_t position_;
};

/// Parses the spec-file expression grammar into a canonical Scalar.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' digits)?
///   primary := digits | identifier | '(' expr ')'
///
/// Division is only accepted by a nonzero constant, so "-3/2" and "l1/2"
/// parse but "1/l1" does not.
Scalar parse_expression(std::string_view text, const ParamNames& params);

}  // namespace rptgeo
