#pragma once

#include <vector>

#include "ellspec/bigint.hpp"

namespace ellspec {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = sign * prod(prime^exponent), primes strictly increasing.
struct IntFactorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  BigInt recompose() const;
};

bool is_probable_prime(const BigInt& n);

/// Trial division up to 10^6, then Pollard rho (Brent variant) on the cofactor.
/// Throws std::invalid_argument for n == 0.
IntFactorization factor_int(const BigInt& n);

/// Product of the primes dividing n to an odd power, with the sign of n.
BigInt squarefree_part(const BigInt& n);

}  // namespace ellspec
