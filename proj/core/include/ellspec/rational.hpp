#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ellspec/bigint.hpp"

namespace ellspec {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(int v) : num_(v) {}            // NOLINT(google-explicit-constructor)
  BigRat(long v) : num_(v) {}           // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  /// Reduces num/den; throws std::domain_error when den == 0.
  BigRat(BigInt num, BigInt den);

  /// Accepts "n" or "n/d" with optional sign on the numerator.
  static BigRat from_string(std::string_view text);
  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  /// max(|num|, den): the naive height used to order search candidates.
  BigInt height() const;

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& o);
  BigRat& operator-=(const BigRat& o);
  BigRat& operator*=(const BigRat& o);
  BigRat& operator/=(const BigRat& o);
  BigRat inverse() const;

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

BigRat pow(const BigRat& base, unsigned long exponent);

/// The nonnegative square root of q when q is a square in Q.
///
/// Works on the reduced fraction: q is a square iff num >= 0 and both num and
/// den are perfect squares. Zero counts as a square.
std::optional<BigRat> is_square_rat(const BigRat& q);

std::ostream& operator<<(std::ostream& os, const BigRat& v);

}  // namespace ellspec
