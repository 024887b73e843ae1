#include "ellspec/bigint.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ellspec {

BigInt::BigInt(long long v) {
  // mpz_class has no long long constructor on every platform.
  v_ = mpz_class(std::to_string(v));
}

BigInt BigInt::from_string(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("empty integer literal");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    }
  }
  mpz_class v(std::string(text.substr(i)), 10);
  if (negative) {
    v = -v;
  }
  return BigInt(std::move(v));
}

BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.mpz()))); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

BigInt tdiv(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) {
    throw std::domain_error("integer division by zero");
  }
  mpz_class r;
  mpz_tdiv_q(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt mod(const BigInt& a, const BigInt& m) {
  if (m.is_zero()) {
    throw std::domain_error("modulus is zero");
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

bool divides(const BigInt& d, const BigInt& a) {
  if (d.is_zero()) {
    return a.is_zero();
  }
  return mpz_divisible_p(a.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

BigInt divexact(const BigInt& a, const BigInt& b) {
  if (!divides(b, a) || b.is_zero()) {
    throw std::domain_error("inexact integer division " + a.to_string() + " / " + b.to_string());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt isqrt(const BigInt& a) {
  if (a.sign() < 0) {
    throw std::domain_error("square root of negative integer");
  }
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

std::optional<BigInt> exact_sqrt(const BigInt& a) {
  if (a.sign() < 0 || mpz_perfect_square_p(a.mpz().get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return isqrt(a);
}

BigInt invert_mod(const BigInt& a, const BigInt& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t()) == 0) {
    throw std::domain_error("no modular inverse of " + a.to_string() + " mod " + m.to_string());
  }
  return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace ellspec
