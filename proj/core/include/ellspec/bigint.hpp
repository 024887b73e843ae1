#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ellspec {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper around GMP's mpz_class. Keeps expression templates out of
/// the public interface so `auto` bindings always hold a concrete value.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(v) {}            // NOLINT(google-explicit-constructor)
  BigInt(long v) : v_(v) {}           // NOLINT(google-explicit-constructor)
  BigInt(long long v);                // NOLINT(google-explicit-constructor)
  BigInt(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigInt(const mpz_class& v) : v_(v) {}
  explicit BigInt(mpz_class&& v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
  static BigInt from_string(std::string_view text);
  std::string to_string() const { return v_.get_str(); }

  const mpz_class& mpz() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

BigInt abs(const BigInt& a);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);

/// Truncating quotient (rounds toward zero), like C++ integer division.
BigInt tdiv(const BigInt& a, const BigInt& b);
/// Floor remainder in [0, |m|).
BigInt mod(const BigInt& a, const BigInt& m);
/// Requires b | a; throws std::domain_error otherwise.
BigInt divexact(const BigInt& a, const BigInt& b);
bool divides(const BigInt& d, const BigInt& a);

/// Floor square root of a nonnegative integer.
BigInt isqrt(const BigInt& a);
/// The exact square root when `a` is a perfect square (negative input yields nothing).
std::optional<BigInt> exact_sqrt(const BigInt& a);

/// Modular inverse of `a` modulo `m`; throws std::domain_error when not invertible.
BigInt invert_mod(const BigInt& a, const BigInt& m);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace ellspec
