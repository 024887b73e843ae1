#pragma once

// 2-descent over Q(t): the maps Theta_i into Q(t)^x / squares on split curves,
// and the 2-isogeny pair between y^2 = x^3 + Ax^2 + Bx and its dual.

#include <optional>

#include "ellspec/curve.hpp"
#include "ellspec/int_poly.hpp"

namespace ellspec {

/// Class in Q(t)^x / (Q(t)^x)^2, represented by its square-free kernel in Z[t]
/// (sign, odd content primes, odd-multiplicity factors).
class SquareClass {
 public:
  SquareClass() : rep_(1) {}
  /// The class of a nonzero element.
  explicit SquareClass(const RatFunc& x);

  const IntPoly& representative() const { return rep_; }
  bool is_trivial() const { return rep_.is_one(); }

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
  friend bool operator==(const SquareClass&, const SquareClass&) = default;

 private:
  IntPoly rep_;
};

/// True when a / b is a square in Q(t); independent of the representative choice.
bool same_class(const RatFunc& a, const RatFunc& b);

/// Theta_i(P) for i in {1, 2, 3}; throws std::domain_error unless the curve is split.
SquareClass theta(int i, const CurveQt& curve, const PointQt& p);

/// P in 2E(Q(t)) iff all three Theta_i(P) are trivial.
bool in_double(const CurveQt& curve, const PointQt& p);

/// (e_j - e_i)(e_k - e_i); requires a split curve with roots in Z[t].
IntPoly divisibility_bound(int i, const CurveQt& curve);

/// y^2 = x^3 - 2A x^2 + (A^2 - 4B) x for a model with C = 0 and B != 0.
CurveQt dual_curve(const CurveQt& curve);

/// The 2-isogeny E -> dual(E); O and (0, 0) map to O.
PointQt phi(const CurveQt& curve, const PointQt& p);
/// The dual isogeny dual(E) -> E; O and (0, 0) map to O.
PointQt psi(const CurveQt& curve, const PointQt& pbar);

/// A point P on E with phi(P) = pbar; exists iff pbar is O, or x(pbar) is a
/// nonzero square, or pbar = (0, 0) and A^2 - 4B is a square.
std::optional<PointQt> phi_preimage(const CurveQt& curve, const PointQt& pbar);
/// A point on dual(E) mapping to p under psi; exists iff p is O, or x(p) is a
/// nonzero square, or p = (0, 0) and B is a square.
std::optional<PointQt> psi_preimage(const CurveQt& curve, const PointQt& p);

}  // namespace ellspec
