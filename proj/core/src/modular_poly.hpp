#pragma once

// Polynomials over Z/pZ for a word-sized odd prime p. Internal to the
// factorization code; not installed.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ellspec/bigint.hpp"
#include "ellspec/int_poly.hpp"

namespace ellspec::detail {

using ModPoly = std::vector<std::uint64_t>;  // lowest degree first, trimmed

class ModField {
 public:
  explicit ModField(std::uint64_t p) : p_(p) {}

  std::uint64_t prime() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

  ModPoly reduce(const IntPoly& f) const;

  ModPoly add(const ModPoly& a, const ModPoly& b) const;
  ModPoly sub(const ModPoly& a, const ModPoly& b) const;
  ModPoly mul(const ModPoly& a, const ModPoly& b) const;
  ModPoly scale(const ModPoly& a, std::uint64_t k) const;
  /// Quotient and remainder; b must be nonzero.
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const;
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(const ModPoly& a) const;
  ModPoly derivative(const ModPoly& a) const;
  /// Monic gcd.
  ModPoly gcd(ModPoly a, ModPoly b) const;
  /// Returns (s, t) with s*a + t*b = 1; a and b must be coprime.
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const;
  ModPoly powmod(ModPoly base, const BigInt& exponent, const ModPoly& modulus) const;

  /// Complete factorization of a monic square-free polynomial into monic
  /// irreducibles (distinct-degree then Cantor-Zassenhaus equal-degree).
  std::vector<ModPoly> factor_squarefree(const ModPoly& f, std::mt19937_64& rng) const;

 private:
  void equal_degree_split(const ModPoly& f, unsigned d, std::mt19937_64& rng,
                          std::vector<ModPoly>& out) const;
  std::uint64_t p_;
};

inline int mdeg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }
void mtrim(ModPoly& a);

}  // namespace ellspec::detail
