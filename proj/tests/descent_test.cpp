#include <gtest/gtest.h>

#include "ellspec/curve_text.hpp"
#include "ellspec/descent.hpp"
#include "test_support.hpp"

namespace ellspec {
namespace {

using testing::random_split_sample;
using testing::uniform;

RatFunc R(const char* s) { return parse_rat_func(s); }
IntPoly P(const char* s) { return parse_poly(s); }

const CurveQt& split_curve() {
  static const CurveQt e = parse_curve("e=(0, t, 7*t + 1)");
  return e;
}

TEST(SquareClass, Representatives) {
  EXPECT_EQ(SquareClass(R("4*t^3 / 9")).representative(), P("t"));
  EXPECT_EQ(SquareClass(R("-12 / (t + 1)")).representative(), P("-3*t - 3"));
  EXPECT_TRUE(SquareClass(R("(t^2 + 1)^2 / 4")).is_trivial());
  EXPECT_EQ(SquareClass(R("2*t")) * SquareClass(R("6*t")), SquareClass(R("3")));
  EXPECT_TRUE(same_class(R("2*t"), R("8*t^3")));
  EXPECT_FALSE(same_class(R("t"), R("-t")));
}

TEST(Theta, SpecialValues) {
  const CurveQt& e = split_curve();
  EXPECT_TRUE(theta(1, e, PointQt()).is_trivial());
  EXPECT_EQ(theta(1, e, PointQt(0, 0)).representative(), P("t*(7*t + 1)"));
  EXPECT_FALSE(in_double(e, PointQt(0, 0)));
  EXPECT_TRUE(in_double(e, PointQt()));
  EXPECT_THROW(theta(1, parse_curve("y^2 = x^3 + t^2*x^2 - x"), PointQt()), std::domain_error);
  EXPECT_THROW(theta(4, e, PointQt()), std::out_of_range);
}

TEST(Theta, DivisibilityBounds) {
  const CurveQt& e = split_curve();
  EXPECT_EQ(divisibility_bound(1, e), P("t*(7*t + 1)"));
  EXPECT_EQ(divisibility_bound(2, e), P("-t*(6*t + 1)"));
  EXPECT_EQ(divisibility_bound(3, e), P("(7*t + 1)*(6*t + 1)"));
  const CurveQt c = parse_curve("e=(0, 1, -1)");
  EXPECT_EQ(divisibility_bound(1, c), P("-1"));
  EXPECT_EQ(divisibility_bound(2, c), P("2"));
  EXPECT_EQ(divisibility_bound(3, c), P("2"));
  EXPECT_THROW(divisibility_bound(1, parse_curve("y^2 = x^3 + x + 1")), std::domain_error);
}

// Samples m*P + T on random split curves.
std::vector<std::pair<CurveQt, std::vector<PointQt>>> samples(int curves) {
  std::vector<std::pair<CurveQt, std::vector<PointQt>>> out;
  while (static_cast<int>(out.size()) < curves) {
    auto s = random_split_sample(1, 6);
    if (!s) continue;
    std::vector<PointQt> pts;
    const auto tt = s->curve.two_torsion();
    for (int m = -2; m <= 2; ++m) {
      const PointQt mp = s->curve.scalar_mul(m, s->point);
      pts.push_back(s->curve.add(mp, tt[static_cast<std::size_t>(uniform(0, 3))]));
    }
    out.emplace_back(s->curve, std::move(pts));
  }
  return out;
}

TEST(Theta, HomomorphismProductAndDivisibility) {
  int points = 0;
  for (const auto& [e, pts] : samples(10)) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
      const PointQt& p = pts[a];
      const PointQt& q = pts[(a + 1) % pts.size()];
      const PointQt pq = e.add(p, q);
      IntPoly prod(1);
      for (int i = 1; i <= 3; ++i) {
        const SquareClass s = theta(i, e, p);
        ASSERT_EQ(theta(i, e, pq), s * theta(i, e, q));
        ASSERT_TRUE(try_divexact(divisibility_bound(i, e), s.representative()))
            << s.representative() << " vs " << divisibility_bound(i, e);
        prod = prod * s.representative();
      }
      ASSERT_TRUE(poly_sqrt(prod)) << prod;
      ASSERT_TRUE(in_double(e, e.scalar_mul(2, p)));
      ++points;
    }
  }
  EXPECT_EQ(points, 50);
}

TEST(Isogeny, DualCurve) {
  const CurveQt e = parse_curve("y^2 = x^3 + t^2*x^2 - x");
  const CurveQt d = dual_curve(e);
  EXPECT_EQ(d, parse_curve("y^2 = x^3 - 2*t^2*x^2 + (t^4 + 4)*x"));
  EXPECT_EQ(d.discriminant(), RatFunc(16) * e.B() * pow(e.A() * e.A() - RatFunc(4) * e.B(), 2));
  EXPECT_EQ(dual_curve(parse_curve("(0, 1, 0)")), parse_curve("(0, -4, 0)"));
  EXPECT_THROW(dual_curve(parse_curve("y^2 = x^3 - x + t^2")), std::domain_error);
}

TEST(Isogeny, KernelConvention) {
  const CurveQt e = parse_curve("y^2 = x^3 + t^2*x^2 - x");
  EXPECT_EQ(phi(e, PointQt(0, 0)), PointQt());
  EXPECT_EQ(phi(e, PointQt()), PointQt());
  EXPECT_EQ(psi(e, PointQt(0, 0)), PointQt());
}

TEST(Isogeny, PsiPhiIsDoubling) {
  int checked = 0;
  for (const auto& [split, pts] : samples(5)) {
    const CurveQt e = shift_x(split, (*split.split_roots())[0]);
    const CurveQt d = dual_curve(e);
    const RatFunc e1 = (*split.split_roots())[0];
    for (const PointQt& p0 : pts) {
      const PointQt p = p0.is_infinity() ? p0 : PointQt(p0.x() - e1, p0.y());
      ASSERT_TRUE(e.contains(p));
      const PointQt pb = phi(e, p);
      ASSERT_TRUE(d.contains(pb));
      ASSERT_EQ(psi(e, pb), e.scalar_mul(2, p));
      // x of an image point is a square, and the preimage maps back.
      if (!pb.is_infinity() && !pb.x().is_zero()) {
        ASSERT_TRUE(is_square_rf(pb.x()));
        ASSERT_TRUE(phi_preimage(e, pb));
      }
      // phi is a homomorphism, including the kernel convention.
      const PointQt q = pts[0].is_infinity() ? pts[0] : PointQt(pts[0].x() - e1, pts[0].y());
      ASSERT_EQ(phi(e, e.add(p, q)), d.add(pb, phi(e, q)));
      ASSERT_EQ(phi(e, e.add(p, PointQt(0, 0))), pb);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 25);
}

TEST(Isogeny, ImageCriterion) {
  const CurveQt e = parse_curve("y^2 = x^3 + t^2*x^2 - x");
  const CurveQt d = dual_curve(e);
  const PointQt p(1, RatFunc::var());
  for (int m = 1; m <= 4; ++m) {
    const PointQt mp = e.scalar_mul(m, p);
    const PointQt pb = phi(e, mp);
    // In the image: x square, preimage found.
    ASSERT_TRUE(is_square_rf(pb.x()));
    const auto pre = phi_preimage(e, pb);
    ASSERT_TRUE(pre);
    EXPECT_EQ(phi(e, *pre), pb);
    // On E, x(P) is a square iff P comes from the dual.
    EXPECT_EQ(psi_preimage(e, mp).has_value(), is_square_rf(mp.x()).has_value());
  }
  // x(1, t) = 1 is a square, so (1, t) lies in psi of the dual.
  const auto q = psi_preimage(e, p);
  ASSERT_TRUE(q);
  EXPECT_EQ(psi(e, *q), p);
  // (0, 0) on the dual: its preimages are the roots of x^2 + t^2 x - 1, not rational.
  EXPECT_FALSE(phi_preimage(e, PointQt(0, 0)));
  // A point whose x is not a square: -1 * (square) on a twist-free sample.
  const CurveQt f = parse_curve("(0, -1, 0)");  // y^2 = x^3 - x
  const CurveQt fd = dual_curve(f);             // y^2 = x^3 + 4x
  const PointQt r(2, 4);                         // 8 + 8 = 16
  ASSERT_TRUE(fd.contains(r));
  EXPECT_FALSE(phi_preimage(f, r));
  EXPECT_FALSE(is_square_rf(r.x()));
}

}  // namespace
}  // namespace ellspec
