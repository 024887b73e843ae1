#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ellspec/int_poly.hpp"
#include "ellspec/rational.hpp"

namespace ellspec {

/// Element of Q(t) as a reduced fraction of integer polynomials.
///
/// Canonical form: num and den coprime in Q[t], lc(den) > 0, and the integer
/// contents of num and den coprime. Any rational constant therefore lives in
/// the contents (e.g. (t+1)/2 is num = t+1, den = 2), which makes equality of
/// field elements structural equality.
class RatFunc {
 public:
  RatFunc() : den_(BigInt(1)) {}
  RatFunc(int c) : RatFunc(BigInt(c)) {}            // NOLINT(google-explicit-constructor)
  RatFunc(const BigInt& c) : num_(c), den_(BigInt(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRat& c) : num_(c.num()), den_(c.den()) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const IntPoly& p) : num_(p), den_(BigInt(1)) {}  // NOLINT(google-explicit-constructor)
  /// Reduces num/den; throws std::domain_error when den is zero.
  RatFunc(IntPoly num, IntPoly den);

  /// The element t.
  static RatFunc var() { return RatFunc(IntPoly::var()); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_.leading().is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// The rational value of a constant element.
  std::optional<BigRat> constant_value() const;
  /// The element as a polynomial in Z[t] when it is one.
  std::optional<IntPoly> as_int_poly() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc inverse() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// "num" for polynomials, otherwise "(num) / (den)".
  std::string to_string() const;

 private:
  void canonicalize();

  IntPoly num_;
  IntPoly den_;
};

RatFunc pow(const RatFunc& base, unsigned long exponent);

/// Degree of x as a map to the projective line: max(deg num, deg den).
/// Throws std::invalid_argument for x == 0.
int deg_map(const RatFunc& x);

/// x(t0), or nothing when t0 is a pole of x.
std::optional<BigRat> eval_rf(const RatFunc& x, const BigRat& t0);

/// r with r^2 = x when x is a square in Q(t). The numerator of r has positive
/// leading coefficient.
std::optional<RatFunc> is_square_rf(const RatFunc& x);

std::ostream& operator<<(std::ostream& os, const RatFunc& x);

}  // namespace ellspec
