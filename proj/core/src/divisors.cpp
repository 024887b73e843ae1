#include "ellspec/divisors.hpp"

#include <stdexcept>

#include "ellspec/poly_factor.hpp"

namespace ellspec {

namespace {

constexpr std::size_t kMaxDivisors = std::size_t{1} << 20U;

std::vector<BigInt> prime_products(const Factorization& f) {
  const std::size_t m = f.content_primes.size();
  if (m >= 20) throw std::length_error("too many content primes to enumerate divisors");
  std::vector<BigInt> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    BigInt c(1);
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) c *= f.content_primes[j].prime;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

DivisorSet enumerate_divisors(const IntPoly& target) {
  if (target.is_zero()) throw std::invalid_argument("divisors of the zero polynomial");
  const Factorization f = factor(target);
  const std::size_t k = f.poly_factors.size();
  const std::vector<BigInt> consts = prime_products(f);
  if (k >= 20 || ((std::size_t{1} << k) - 1) * consts.size() * 2 > kMaxDivisors) {
    throw std::length_error("divisor set of " + target.to_string() + " is too large");
  }
  DivisorSet out{target, {}};
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    IntPoly h(1);
    for (std::size_t j = 0; j < k; ++j) {
      if ((mask >> j) & 1U) h = h * f.poly_factors[j].first;
    }
    for (const BigInt& c : consts) {
      const IntPoly d = h * c;
      out.divisors.push_back(d);
      out.divisors.push_back(-d);
    }
  }
  return out;
}

std::vector<BigInt> constant_divisors(const IntPoly& target) {
  if (target.is_zero()) throw std::invalid_argument("divisors of the zero polynomial");
  std::vector<BigInt> out;
  for (const BigInt& c : prime_products(factor(target))) {
    if (!c.is_one()) out.push_back(c);
    out.push_back(-c);
  }
  return out;
}

}  // namespace ellspec
