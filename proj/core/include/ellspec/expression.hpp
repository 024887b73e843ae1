#pragma once

// Text front-end for polynomials and rational functions.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := int | 't' | 'x' | 'y' | '(' expr ')'
//
// 'x' and 'y' are only accepted where the caller allows them (curve
// equations); division is only allowed by expressions free of x and y.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ellspec/int_poly.hpp"
#include "ellspec/rat_func.hpp"

namespace ellspec {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Polynomial in x, y with Q(t) coefficients, keyed by (deg_x, deg_y).
struct XYPoly {
  std::map<std::pair<unsigned, unsigned>, RatFunc> terms;

  static XYPoly constant(const RatFunc& c);
  static XYPoly monomial(unsigned dx, unsigned dy);

  bool is_zero() const { return terms.empty(); }
  /// The coefficient of x^dx y^dy (zero when absent).
  RatFunc coeff(unsigned dx, unsigned dy) const;
  /// True when only the (0, 0) term is present (or the polynomial is zero).
  bool is_scalar() const;

  XYPoly operator-() const;
  friend XYPoly operator+(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator-(const XYPoly& a, const XYPoly& b);
  friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
};

/// Parses `text` allowing the variables listed in `variables` (a subset of "txy").
/// Throws ParseError with the byte offset of the offending token.
XYPoly parse_expression(std::string_view text, std::string_view variables);

/// Parses an element of Z[t]; rational coefficients are rejected.
IntPoly parse_poly(std::string_view text);

/// Parses an element of Q(t), e.g. "(t^2 + 1) / (2*t)".
RatFunc parse_rat_func(std::string_view text);

}  // namespace ellspec
