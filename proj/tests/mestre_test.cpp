#include <gtest/gtest.h>

#include "ellspec/expression.hpp"
#include "ellspec/mestre.hpp"
#include "ellspec/poly_factor.hpp"
#include "ellspec/specialize.hpp"
#include "json.hpp"

namespace ellspec {
namespace {

BigRat Q(const char* s) { return BigRat::from_string(s); }

const MestreInstance& m11() {
  static const MestreInstance m = build_mestre(BigRat(1), BigRat(1));
  return m;
}
const MestreInstance& m212() {
  static const MestreInstance m = build_mestre(BigRat(2), BigRat(12));
  return m;
}

std::vector<std::pair<BigRat, BigRat>> grid() {
  std::vector<std::pair<BigRat, BigRat>> out{{BigRat(1), BigRat(1)}, {BigRat(2), BigRat(12)}};
  for (const char* a : {"-1", "3", "-2", "1/2"}) {
    for (const char* b : {"1", "-5", "2/3"}) {
      out.emplace_back(Q(a), Q(b));
    }
  }
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"-3", "5"}, {"5", "7"}, {"-7", "-6"}, {"4", "-1/2"}, {"1/3", "-4"}, {"6", "11"}}) {
    out.emplace_back(Q(a), Q(b));
  }
  return out;
}

TEST(Mestre, BuildRejectsDegenerateParameters) {
  EXPECT_THROW(build_mestre(BigRat(1), BigRat(0)), std::invalid_argument);
  EXPECT_THROW(build_mestre(BigRat(0), BigRat(3)), std::invalid_argument);
  // 4a^3 + 27b^2 = 0: E itself is singular.
  EXPECT_THROW(build_mestre(BigRat(-3), BigRat(2)), SingularCurveError);
}

TEST(Mestre, DisplayedProductForG212) {
  const IntPoly shown = parse_poly("-2^6*3*(t^2 + 1)*(3*t^4 + 2*t^2 + 2)*(3*t^4 + 4*t^2 + 3)*(2*t^4 + 2*t^2 + 3)");
  EXPECT_EQ(m212().g, RatFunc(shown));
  EXPECT_EQ(m212().g_integral, normalized_primitive(shown));
}

TEST(Mestre, GridInvariants) {
  const auto pairs = grid();
  ASSERT_EQ(pairs.size(), 20U);
  for (const auto& [a, b] : pairs) {
    SCOPED_TRACE(a.to_string() + ", " + b.to_string());
    const MestreInstance m = build_mestre(a, b);
    EXPECT_TRUE(m.curve.contains(m.P));
    EXPECT_TRUE(m.curve.contains(m.Q));
    EXPECT_EQ(m.g_integral.degree(), 14);
    EXPECT_TRUE(is_squarefree(m.g_integral));
    EXPECT_TRUE(small_degree_exclusion(m));
    const int dp = morphism_degree(m, m.P), dq = morphism_degree(m, m.Q);
    const int ds = morphism_degree(m, m.curve.add(m.P, m.Q));
    const int dd = morphism_degree(m, m.curve.sub(m.P, m.Q));
    EXPECT_EQ(dp, 4);
    EXPECT_EQ(dq, 4);
    EXPECT_EQ(ds, 8);
    EXPECT_EQ(dd, 8);
    EXPECT_EQ(ds + dd, 2 * (dp + dq));  // parallelogram law
    EXPECT_EQ(pairing(m, m.P, m.Q), BigRat(0));
    EXPECT_EQ(pairing(m, m.P, m.P), BigRat(4));
    EXPECT_EQ(morphism_degree(m, PointQt()), 0);
    // The integral model really is one, and the scaling carries P onto it.
    EXPECT_TRUE(has_integral_coefficients(m.integral.curve));
    EXPECT_TRUE(m.integral.curve.contains(m.integral.map(m.P)));
  }
}

TEST(Mestre, PointCoordinatesDecompose) {
  for (const MestreInstance* m : {&m11(), &m212()}) {
    for (const PointQt& pt : {m->integral.map(m->P), m->integral.map(m->Q)}) {
      const XDecomposition d = x_decompose(pt);
      // Verified by squaring back.
      EXPECT_EQ(RatFunc(d.p, d.q * d.q), pt.x());
      EXPECT_EQ(gcd(d.p, d.q).degree(), 0);
      const auto r = is_square_rf(pt.x() * pt.x());
      ASSERT_TRUE(r);
      EXPECT_TRUE(*r == pt.x() || *r == -pt.x());
    }
    // x(P) is a polynomial and x(Q) has denominator t^2 (up to constants).
    EXPECT_EQ(x_decompose(m->integral.map(m->P)).q.degree(), 0);
    EXPECT_EQ(x_decompose(m->integral.map(m->Q)).q.degree(), 1);
  }
}

TEST(Mestre, TorsionHasDegreeZero) {
  // x^3 + 2x + 12 has the root -2, so (-2g, 0) is 2-torsion on E_g.
  const PointQt t(RatFunc(-2) * m212().g, RatFunc(0));
  EXPECT_EQ(morphism_degree(m212(), t), 0);
  EXPECT_EQ(pairing(m212(), t, m212().P), BigRat(0));
}

TEST(Mestre, PairingSymmetricAndBilinear) {
  for (const MestreInstance* m : {&m11(), &m212()}) {
    const CurveQt& e = m->curve;
    auto comb = [&](long i, long j) { return e.add(e.scalar_mul(i, m->P), e.scalar_mul(j, m->Q)); };
    for (long i = -2; i <= 2; ++i) {
      for (long j = -2; j <= 2; ++j) {
        const PointQt t = comb(i, j);
        // Height of iP + jQ from <P,P> = <Q,Q> = 4, <P,Q> = 0.
        EXPECT_EQ(morphism_degree(*m, t), 4 * (i * i + j * j)) << i << "," << j;
      }
    }
    for (auto [i, j, k, l] : std::vector<std::array<long, 4>>{{1, 1, 1, -1}, {2, -1, 1, 2}, {1, 0, 2, 1}}) {
      const PointQt t = comb(i, j), s = comb(k, l);
      EXPECT_EQ(pairing(*m, t, s), pairing(*m, s, t));
      EXPECT_EQ(pairing(*m, t, s), BigRat(4 * (i * k + j * l)));
    }
  }
}

TEST(Mestre, SmallDegreeExclusionFailurePaths) {
  EXPECT_FALSE(small_degree_exclusion(parse_poly("(t^2 + 1)^2*(t^10 + t + 1)")));
  EXPECT_FALSE(small_degree_exclusion(parse_poly("t^8 + t + 1")));
  EXPECT_TRUE(small_degree_exclusion(parse_poly("t^9 + t + 1")));
}

TEST(Mestre, DeclaredRankTwoGivesGenerators) {
  const MestreConclusion c = generator_certificate(m11(), BigRat(3), 2, "asserted rank of E_g^{1,1}(3)(Q)",
                                                   std::string("injectivity over the splitting field, declared"));
  EXPECT_TRUE(c.rank_two_proved);
  EXPECT_FALSE(c.injectivity.certificate);
  ASSERT_TRUE(c.injectivity.diagnostic);
  EXPECT_EQ(c.injectivity.diagnostic->condition, Condition::A1B);
  EXPECT_FALSE(c.injectivity.diagnostic->certifying);
  EXPECT_EQ(c.conclusions.back(), "rank(E_g/Q(t)) = 2 with free generators P, Q");
  EXPECT_THROW(generator_certificate(m11(), BigRat(3), 2, "asserted"), std::invalid_argument);
}

TEST(Mestre, CertifiedTwistAtFour) {
  const MestreConclusion c = generator_certificate(m212(), BigRat(4), 2, "asserted");
  ASSERT_TRUE(c.injectivity.certificate);
  EXPECT_EQ(c.injectivity.certificate->condition, Condition::ScriptA);
  EXPECT_TRUE(c.injectivity.certificate->passed);
  EXPECT_FALSE(c.injectivity.declared_source);
  EXPECT_TRUE(c.rank_two_proved);
  EXPECT_EQ(c.notes.front(), "condition scriptA holds at t0 = 4");

  const auto j = nlohmann::json::parse(conclusion_to_json(c));
  EXPECT_EQ(j.at("injectivity").at("certificate").at("condition"), "scriptA");
  EXPECT_EQ(j.at("specialized_rank").at("source"), "asserted");
  EXPECT_EQ(conclusion_to_json(c), conclusion_to_json(generator_certificate(m212(), BigRat(4), 2, "asserted")));
}

TEST(Mestre, OtherRanksGiveInequalities) {
  const MestreConclusion c = generator_certificate(m212(), BigRat(4), 3, "hypothetical");
  EXPECT_FALSE(c.rank_two_proved);
  EXPECT_EQ(c.conclusions, (std::vector<std::string>{"rank(E_g/Q(t)) >= 2", "rank(E_g/Q(t)) <= 3"}));
  EXPECT_THROW(generator_certificate(m212(), BigRat(4), 1, "hypothetical"), std::invalid_argument);
}

// On a certified pair (curve, t0) the images of the independent points P, Q stay independent.
TEST(Mestre, CertifiedSpecializationKeepsIndependence) {
  const CurveQt& e = m212().curve;
  const CurveQ e4 = specialize_curve(e, BigRat(4));
  const auto rel = relation_search(e4, {specialize_point(e, m212().P, BigRat(4)), specialize_point(e, m212().Q, BigRat(4))}, 10);
  EXPECT_EQ(rel, std::nullopt);
}

}  // namespace
}  // namespace ellspec
