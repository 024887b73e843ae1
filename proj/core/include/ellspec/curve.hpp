#pragma once

// Weierstrass cubics y^2 = x^3 + A x^2 + B x + C over Q (BigRat) or Q(t)
// (RatFunc), with the affine chord-tangent law and an explicit point at infinity.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ellspec/int_poly.hpp"
#include "ellspec/rat_func.hpp"
#include "ellspec/rational.hpp"

namespace ellspec {

class SingularCurveError : public std::domain_error {
 public:
  explicit SingularCurveError(const std::string& model)
      : std::domain_error("singular model (discriminant vanishes): " + model) {}
};

class OffCurveError : public std::domain_error {
 public:
  explicit OffCurveError(const std::string& what) : std::domain_error("point not on curve: " + what) {}
};

template <class F>
class Point {
 public:
  Point() = default;  // O
  Point(F x, F y) : xy_(std::make_pair(std::move(x), std::move(y))) {}

  static Point infinity() { return Point(); }

  bool is_infinity() const { return !xy_.has_value(); }
  const F& x() const { return xy_->first; }
  const F& y() const { return xy_->second; }

  std::string to_string() const {
    return is_infinity() ? "O" : "(" + x().to_string() + ", " + y().to_string() + ")";
  }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::optional<std::pair<F, F>> xy_;
};

/// All distinct roots in F of x^3 + a x^2 + b x + c (implemented for Q and Q(t)).
std::vector<BigRat> cubic_roots(const BigRat& a, const BigRat& b, const BigRat& c);
std::vector<RatFunc> cubic_roots(const RatFunc& a, const RatFunc& b, const RatFunc& c);

template <class F>
class Curve {
 public:
  using Pt = Point<F>;

  /// Validated model; splits the cubic when all three roots lie in F.
  static Curve from_coefficients(F a, F b, F c) {
    Curve e(std::move(a), std::move(b), std::move(c));
    auto roots = cubic_roots(e.a_, e.b_, e.c_);
    if (roots.size() == 3) {
      e.roots_ = std::array<F, 3>{roots[0], roots[1], roots[2]};
    }
    return e;
  }

  /// y^2 = (x - e1)(x - e2)(x - e3), keeping the given root order.
  static Curve from_roots(const F& e1, const F& e2, const F& e3) {
    Curve e(-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3, -(e1 * e2 * e3));
    e.roots_ = std::array<F, 3>{e1, e2, e3};
    return e;
  }

  const F& A() const { return a_; }
  const F& B() const { return b_; }
  const F& C() const { return c_; }
  const std::optional<std::array<F, 3>>& split_roots() const { return roots_; }
  bool is_split() const { return roots_.has_value(); }

  /// Discriminant of the cubic x^3 + Ax^2 + Bx + C.
  const F& discriminant() const { return disc_; }
  /// Discriminant of the Weierstrass model, 16 times the cubic discriminant.
  F weierstrass_discriminant() const { return F(16) * disc_; }

  /// c4^3 / Delta.
  F j_invariant() const {
    const F c4 = F(16) * (a_ * a_ - F(3) * b_);
    return c4 * c4 * c4 / weierstrass_discriminant();
  }

  F rhs(const F& x) const { return ((x + a_) * x + b_) * x + c_; }

  bool contains(const Pt& p) const { return p.is_infinity() || p.y() * p.y() == rhs(p.x()); }

  void require_on_curve(const Pt& p) const {
    if (!contains(p)) throw OffCurveError(p.to_string() + " on " + to_string());
  }

  Pt neg(const Pt& p) const {
    require_on_curve(p);
    return p.is_infinity() ? p : Pt(p.x(), -p.y());
  }

  Pt add(const Pt& p, const Pt& q) const {
    require_on_curve(p);
    require_on_curve(q);
    return add_unchecked(p, q);
  }

  Pt sub(const Pt& p, const Pt& q) const { return add(p, neg(q)); }

  Pt scalar_mul(long long m, const Pt& p) const {
    require_on_curve(p);
    Pt base = m < 0 ? neg(p) : p;
    unsigned long long k = m < 0 ? 0ULL - static_cast<unsigned long long>(m) : static_cast<unsigned long long>(m);
    Pt acc;
    while (k != 0) {
      if ((k & 1ULL) != 0) acc = add_unchecked(acc, base);
      k >>= 1U;
      if (k != 0) base = add_unchecked(base, base);
    }
    return acc;
  }

  /// The 2-torsion subgroup: O followed by (e, 0) for each root e in F.
  std::vector<Pt> two_torsion() const {
    std::vector<Pt> out{Pt()};
    if (roots_) {
      for (const F& e : *roots_) out.emplace_back(e, F(0));
    } else {
      for (F& e : cubic_roots(a_, b_, c_)) out.emplace_back(std::move(e), F(0));
    }
    return out;
  }

  /// "y^2 = x^3 + (A)*x^2 + (B)*x + (C)" with zero terms dropped; parseable back.
  std::string to_string() const {
    std::string s = "y^2 = x^3";
    auto term = [&s](const F& c, const char* mon) {
      if (c.is_zero()) return;
      s += " + (" + c.to_string() + ")";
      if (*mon != '\0') s += std::string("*") + mon;
    };
    term(a_, "x^2");
    term(b_, "x");
    term(c_, "");
    return s;
  }

  /// Same model coefficients (the recorded root order is not compared).
  friend bool operator==(const Curve& l, const Curve& r) { return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_; }

  Pt add_unchecked(const Pt& p, const Pt& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    F lambda;
    if (p.x() == q.x()) {
      if (p.y() == -q.y()) return Pt();  // includes 2-torsion doubling
      lambda = ((F(3) * p.x() + F(2) * a_) * p.x() + b_) / (F(2) * p.y());
    } else {
      lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    F x3 = lambda * lambda - a_ - p.x() - q.x();
    F y3 = lambda * (p.x() - x3) - p.y();
    return Pt(std::move(x3), std::move(y3));
  }

 private:
  Curve(F a, F b, F c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    disc_ = F(18) * a_ * b_ * c_ - F(4) * a_ * a_ * a_ * c_ + a_ * a_ * b_ * b_ - F(4) * b_ * b_ * b_ -
            F(27) * c_ * c_;
    if (disc_.is_zero()) {
      throw SingularCurveError(to_string());
    }
  }

  F a_, b_, c_;
  F disc_;
  std::optional<std::array<F, 3>> roots_;
};

using CurveQ = Curve<BigRat>;
using CurveQt = Curve<RatFunc>;
using PointQ = Point<BigRat>;
using PointQt = Point<RatFunc>;

/// True when the j-invariant is a nonconstant element of Q(t).
bool has_nonconstant_j(const CurveQt& e);

/// x(P) = p / q^2 with p, q coprime in Z[t].
struct XDecomposition {
  IntPoly p;
  IntPoly q;
};

/// Errors (std::domain_error) when P = O or the reduced denominator of x(P) is
/// not a square in Z[t].
XDecomposition x_decompose(const PointQt& p);

/// A model with coefficients in Z[t] and the constant u relating it to the
/// input by (x, y) -> (u^2 x, u^3 y). Requires polynomial coefficients.
struct IntegralModel {
  CurveQt curve;
  BigInt u;
  PointQt map(const PointQt& p) const;
};
IntegralModel integral_model(const CurveQt& e);

/// True when A, B, C (and recorded roots) all lie in Z[t].
bool has_integral_coefficients(const CurveQt& e);

/// The model with x replaced by x + e, which moves the root e to 0.
CurveQt shift_x(const CurveQt& curve, const RatFunc& e);

}  // namespace ellspec
