#pragma once

// Text forms for curves and points over Q(t):
//
//   e=(e1, e2, e3)                 split model (x - e1)(x - e2)(x - e3)
//   (A, B, C)  or  A=..., B=..., C=...
//   y^2 = x^3 + t^2*x^2 - x        any equation of Weierstrass shape
//
// Points are "O" or "(x, y)" with x, y in Q(t).

#include <string>
#include <string_view>

#include "ellspec/curve.hpp"
#include "ellspec/expression.hpp"

namespace ellspec {

CurveQt parse_curve(std::string_view text);
PointQt parse_point(std::string_view text);
/// Rational t0 or point coordinate, "a" or "a/b".
BigRat parse_rational(std::string_view text);

}  // namespace ellspec
