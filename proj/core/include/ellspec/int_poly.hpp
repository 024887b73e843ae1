#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellspec/bigint.hpp"
#include "ellspec/rational.hpp"

namespace ellspec {

/// Dense univariate polynomial over Z in the variable t.
///
/// Coefficients are stored lowest degree first with no trailing zeros; the zero
/// polynomial is the empty sequence and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(int c) : IntPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  IntPoly(const BigInt& c);               // NOLINT(google-explicit-constructor)
  explicit IntPoly(std::vector<BigInt> coeffs_low_first);

  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// The polynomial t.
  static IntPoly var() { return monomial(BigInt(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  /// Coefficient of t^i (zero beyond the degree).
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;
  const std::vector<BigInt>& coefficients() const { return c_; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& k) { return a *= k; }
  friend IntPoly operator*(const BigInt& k, IntPoly a) { return a *= k; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  /// Total order (degree, then coefficients from the top); used for canonical sorting.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  IntPoly derivative() const;

  BigInt eval(const BigInt& t0) const;
  BigRat eval(const BigRat& t0) const;

  /// Descending-power text in the polynomial grammar, e.g. "3*t^4 - 30*t^3 + 9".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

IntPoly pow(const IntPoly& p, unsigned long exponent);

/// Positive gcd of the coefficients. Throws std::invalid_argument on zero.
BigInt content(const IntPoly& p);
/// p / content(p); the sign of p stays on the primitive part.
IntPoly primitive_part(const IntPoly& p);
/// Primitive part scaled so the leading coefficient is positive.
IntPoly normalized_primitive(const IntPoly& p);

/// Coefficientwise exact division by an integer; throws std::domain_error if inexact.
IntPoly divexact(const IntPoly& p, const BigInt& k);
/// Exact division in Z[t]; throws std::domain_error unless d divides p.
IntPoly divexact(const IntPoly& p, const IntPoly& d);
/// Quotient when d divides p in Z[t].
std::optional<IntPoly> try_divexact(const IntPoly& p, const IntPoly& d);

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q * b + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b);

/// gcd in Z[t], with positive leading coefficient (gcd(0, 0) = 0).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// p = unit * content * prod(part^multiplicity).
struct SquarefreeDecomposition {
  int unit = 1;
  BigInt content{1};
  /// Primitive, positive leading coefficient, pairwise coprime, square-free,
  /// nonconstant; multiplicities strictly increasing.
  std::vector<std::pair<IntPoly, unsigned>> parts;
};

/// Yun's algorithm over Z. Throws std::invalid_argument on zero.
SquarefreeDecomposition squarefree_decompose(const IntPoly& p);

/// True when no irreducible polynomial factor of p appears squared (content ignored).
bool is_squarefree(const IntPoly& p);

/// Product of the distinct primitive irreducible factors of p times the distinct
/// primes of its content, with positive leading coefficient.
IntPoly radical(const IntPoly& p);

/// The unique square-free s in Z[t] with p = s * (square in Z[t]).
///
/// This is the representative of the class of p in Q(t)^x / squares: the sign
/// of p, the odd-multiplicity primes of the content, and the odd-multiplicity
/// square-free parts.
IntPoly squarefree_kernel(const IntPoly& p);

/// r with r^2 = p and positive leading coefficient when p is a square in Z[t].
std::optional<IntPoly> poly_sqrt(const IntPoly& p);

/// 18ABC - 4A^3 C + A^2 B^2 - 4B^3 - 27C^2, the discriminant of x^3 + Ax^2 + Bx + C.
IntPoly cubic_discriminant(const IntPoly& a, const IntPoly& b, const IntPoly& c);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace ellspec
