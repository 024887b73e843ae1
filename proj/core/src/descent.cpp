#include "ellspec/descent.hpp"

#include <stdexcept>
#include <string>

namespace ellspec {

namespace {

const std::array<RatFunc, 3>& roots_of(const CurveQt& curve) {
  if (!curve.split_roots()) {
    throw std::domain_error("curve " + curve.to_string() + " is not split over Q(t)");
  }
  return *curve.split_roots();
}

void check_index(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("root index must be 1, 2 or 3");
}

void require_two_torsion_model(const CurveQt& curve) {
  if (!curve.C().is_zero() || curve.B().is_zero()) {
    throw std::domain_error("expected a model y^2 = x^3 + Ax^2 + Bx with B != 0, got " + curve.to_string());
  }
}

bool is_origin(const PointQt& p) { return !p.is_infinity() && p.x().is_zero() && p.y().is_zero(); }

// Shared by phi and psi: the isogeny from y^2 = x^3 + a x^2 + b x with kernel
// {O, (0, 0)}, followed by (x, y) -> (x / s^2, y / s^3).
PointQt isogeny(const RatFunc& b, const RatFunc& s, const PointQt& p) {
  if (p.is_infinity() || is_origin(p)) return PointQt();
  const RatFunc x2 = p.x() * p.x();
  const RatFunc s2 = s * s;
  return PointQt(p.y() * p.y() / (x2 * s2), p.y() * (x2 - b) / (x2 * s2 * s));
}

// Preimage under the isogeny from y^2 = x^3 + a x^2 + b x.
std::optional<PointQt> isogeny_preimage(const RatFunc& a, const RatFunc& b, const PointQt& target) {
  if (target.is_infinity()) return PointQt();
  if (is_origin(target)) {
    // The fibre over (0, 0) is the pair of roots of x^2 + a x + b.
    auto r = is_square_rf(a * a - RatFunc(4) * b);
    if (!r) return std::nullopt;
    return PointQt((-a + *r) / RatFunc(2), 0);
  }
  auto w = is_square_rf(target.x());
  if (!w || w->is_zero()) return std::nullopt;
  const RatFunc x = (*w * *w - a + target.y() / *w) / RatFunc(2);
  return PointQt(x, *w * x);
}

}  // namespace

SquareClass::SquareClass(const RatFunc& x) {
  if (x.is_zero()) throw std::domain_error("square class of zero");
  // n / d has the class of n * d.
  rep_ = squarefree_kernel(x.num() * x.den());
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  SquareClass r;
  r.rep_ = squarefree_kernel(a.rep_ * b.rep_);
  return r;
}

bool same_class(const RatFunc& a, const RatFunc& b) { return is_square_rf(a / b).has_value(); }

SquareClass theta(int i, const CurveQt& curve, const PointQt& p) {
  check_index(i);
  const auto& e = roots_of(curve);
  curve.require_on_curve(p);
  if (p.is_infinity()) return SquareClass();
  const RatFunc& ei = e[static_cast<std::size_t>(i - 1)];
  if (p.x() == ei) {
    const RatFunc& ej = e[static_cast<std::size_t>(i % 3)];
    const RatFunc& ek = e[static_cast<std::size_t>((i + 1) % 3)];
    return SquareClass((ej - ei) * (ek - ei));
  }
  return SquareClass(p.x() - ei);
}

bool in_double(const CurveQt& curve, const PointQt& p) {
  for (int i = 1; i <= 3; ++i) {
    if (!theta(i, curve, p).is_trivial()) return false;
  }
  return true;
}

IntPoly divisibility_bound(int i, const CurveQt& curve) {
  check_index(i);
  const auto& e = roots_of(curve);
  const RatFunc& ei = e[static_cast<std::size_t>(i - 1)];
  const RatFunc v = (e[static_cast<std::size_t>(i % 3)] - ei) * (e[static_cast<std::size_t>((i + 1) % 3)] - ei);
  auto p = v.as_int_poly();
  if (!p) throw std::domain_error("roots of " + curve.to_string() + " are not in Z[t]");
  return *p;
}

CurveQt dual_curve(const CurveQt& curve) {
  require_two_torsion_model(curve);
  const RatFunc& a = curve.A();
  return CurveQt::from_coefficients(RatFunc(-2) * a, a * a - RatFunc(4) * curve.B(), 0);
}

PointQt phi(const CurveQt& curve, const PointQt& p) {
  require_two_torsion_model(curve);
  curve.require_on_curve(p);
  return isogeny(curve.B(), RatFunc(1), p);
}

PointQt psi(const CurveQt& curve, const PointQt& pbar) {
  const CurveQt dual = dual_curve(curve);
  dual.require_on_curve(pbar);
  return isogeny(dual.B(), RatFunc(2), pbar);
}

std::optional<PointQt> phi_preimage(const CurveQt& curve, const PointQt& pbar) {
  require_two_torsion_model(curve);
  dual_curve(curve).require_on_curve(pbar);
  auto p = isogeny_preimage(curve.A(), curve.B(), pbar);
  if (p && (!curve.contains(*p) || phi(curve, *p) != pbar)) {
    throw std::logic_error("phi_preimage: constructed point does not map to the target");
  }
  return p;
}

std::optional<PointQt> psi_preimage(const CurveQt& curve, const PointQt& p) {
  const CurveQt dual = dual_curve(curve);
  curve.require_on_curve(p);
  // psi is the isogeny from the dual model into y^2 = x^3 + 4A x^2 + 16B x,
  // which is E under (x, y) -> (x / 4, y / 8).
  const PointQt scaled = p.is_infinity() ? p : PointQt(RatFunc(4) * p.x(), RatFunc(8) * p.y());
  auto q = isogeny_preimage(dual.A(), dual.B(), scaled);
  if (q && (!dual.contains(*q) || psi(curve, *q) != p)) {
    throw std::logic_error("psi_preimage: constructed point does not map to the target");
  }
  return q;
}

}  // namespace ellspec
