#pragma once

// The specialization map E(Q(t)) -> E_t0(Q): evaluate at t = t0, sending points
// whose x-coordinate has a pole at t0 to O.

#include <optional>
#include <vector>

#include "ellspec/curve.hpp"

namespace ellspec {

/// Throws std::domain_error when a coefficient has a pole at t0 or the
/// specialized model is singular.
CurveQ specialize_curve(const CurveQt& curve, const BigRat& t0);

PointQ specialize_point(const CurveQt& curve, const PointQt& p, const BigRat& t0);

/// sigma(P + Q) == sigma(P) + sigma(Q).
bool homomorphism_check(const CurveQt& curve, const PointQt& p, const PointQt& q, const BigRat& t0);

/// Smallest nonzero (m_1, ..., m_k) with |m_i| <= bound and sum m_i P_i = O.
///
/// Vectors are ordered by max-norm, then lexicographically with each entry
/// ordered 0, 1, -1, 2, -2, ...; so {P, -P} with bound 1 gives (1, 1).
std::optional<std::vector<long>> relation_search(const CurveQ& curve, const std::vector<PointQ>& points, long bound);

}  // namespace ellspec
