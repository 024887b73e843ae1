#pragma once

#include <utility>
#include <vector>

#include "ellspec/factor_int.hpp"
#include "ellspec/int_poly.hpp"
#include "ellspec/rational.hpp"

namespace ellspec {

/// Complete factorization of a nonzero element of Z[t]:
/// unit * prod(content prime^e) * prod(poly factor^m).
struct Factorization {
  int unit = 1;
  std::vector<PrimePower> content_primes;
  /// Primitive irreducible factors with positive leading coefficient, sorted by
  /// (degree, coefficients), pairwise distinct.
  std::vector<std::pair<IntPoly, unsigned>> poly_factors;

  IntPoly recompose() const;
  BigInt content() const;
};

/// Factors p over Z: Yun square-free decomposition, then Zassenhaus (modular
/// factorization, Hensel lifting, subset recombination) on each part.
/// Throws std::invalid_argument on zero.
Factorization factor(const IntPoly& p);

/// Irreducible factors of a primitive square-free polynomial with positive
/// leading coefficient, in canonical order.
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f);

/// Distinct rational roots of p, ascending. p must be nonzero.
std::vector<BigRat> rational_roots(const IntPoly& p);

}  // namespace ellspec
