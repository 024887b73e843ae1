#pragma once

#include <vector>

#include "ellspec/bigint.hpp"
#include "ellspec/int_poly.hpp"

namespace ellspec {

/// Every nonconstant square-free divisor of `target` up to square classes:
/// eps * prod(S) * prod(T) with eps = +-1, S any set of distinct primes of the
/// content and T a nonempty set of distinct primitive irreducible factors.
///
/// Order: T by bitmask over the factors in canonical order, then S by bitmask
/// over the primes ascending, then +1 before -1.
struct DivisorSet {
  IntPoly target;
  std::vector<IntPoly> divisors;
};

/// Throws std::invalid_argument on zero and std::length_error when the set
/// would exceed 2^20 entries.
DivisorSet enumerate_divisors(const IntPoly& target);

/// The constant square-free divisors other than 1: eps * prod(S).
std::vector<BigInt> constant_divisors(const IntPoly& target);

}  // namespace ellspec
