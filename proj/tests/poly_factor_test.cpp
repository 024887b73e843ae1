#include <gtest/gtest.h>

#include <algorithm>

#include "ellspec/expression.hpp"
#include "ellspec/poly_factor.hpp"
#include "test_support.hpp"

namespace ellspec {
namespace {

using testing::has_factor_of_degree_at_most_two;
using testing::random_poly;
using testing::uniform;

IntPoly P(const char* s) { return parse_poly(s); }

std::vector<IntPoly> irreducibles(const Factorization& f) {
  std::vector<IntPoly> r;
  for (const auto& [p, m] : f.poly_factors) r.push_back(p);
  return r;
}

TEST(Factor, RejectsZero) { EXPECT_THROW(factor(IntPoly{}), std::invalid_argument); }

TEST(Factor, SophieGermain) {
  const auto f = factor(P("t^4 + 4"));
  EXPECT_EQ(irreducibles(f), (std::vector<IntPoly>{P("t^2 - 2*t + 2"), P("t^2 + 2*t + 2")}));
  EXPECT_TRUE(f.content_primes.empty());
}

TEST(Factor, ContentAndSign) {
  const auto f = factor(P("-12*t^3 + 12*t"));
  EXPECT_EQ(f.unit, -1);
  EXPECT_EQ(f.content_primes, (std::vector<PrimePower>{{BigInt(2), 2}, {BigInt(3), 1}}));
  EXPECT_EQ(irreducibles(f), (std::vector<IntPoly>{P("t - 1"), P("t"), P("t + 1")}));
  EXPECT_EQ(f.recompose(), P("-12*t^3 + 12*t"));
}

TEST(Factor, MestreTwelveFamilyPolynomial) {
  const IntPoly g = P("-192*(t^2 + 1)*(2*t^4 + 2*t^2 + 3)*(3*t^4 + 2*t^2 + 2)*(3*t^4 + 4*t^2 + 3)");
  const auto f = factor(g);
  EXPECT_EQ(f.unit, -1);
  EXPECT_EQ(f.content_primes, (std::vector<PrimePower>{{BigInt(2), 6}, {BigInt(3), 1}}));
  EXPECT_EQ(irreducibles(f), (std::vector<IntPoly>{P("t^2 + 1"), P("2*t^4 + 2*t^2 + 3"), P("3*t^4 + 2*t^2 + 2"),
                                                   P("3*t^4 + 4*t^2 + 3")}));
  EXPECT_EQ(f.recompose(), g);
}

TEST(Factor, SwinnertonDyerIsIrreducible) {
  // Minimal polynomial of sqrt2 + sqrt3 + sqrt5: splits mod every prime.
  const IntPoly f = P("t^8 - 40*t^6 + 352*t^4 - 960*t^2 + 576");
  EXPECT_EQ(factor_squarefree_primitive(f), (std::vector<IntPoly>{f}));
}

TEST(Factor, IrreducibleQuarticByBruteForce) {
  const IntPoly f = P("9*t^4 - 30*t^3 + 47*t^2 - 30*t + 9");
  ASSERT_FALSE(has_factor_of_degree_at_most_two(f));
  EXPECT_EQ(factor_squarefree_primitive(f), (std::vector<IntPoly>{f}));
}

TEST(Factor, RandomProductsRoundTrip) {
  for (int i = 0; i < 500; ++i) {
    IntPoly f(BigInt(uniform(1, 30)) * BigInt(uniform(0, 1) ? 1 : -1));
    const int parts = static_cast<int>(uniform(1, 4));
    for (int k = 0; k < parts && f.degree() < 12; ++k) {
      const int d = static_cast<int>(std::min<long>(uniform(1, 4), 12 - std::max(f.degree(), 0)));
      f = f * pow(random_poly(d, 1000), static_cast<unsigned>(uniform(1, 2)));
    }
    const auto fac = factor(f);
    ASSERT_EQ(fac.recompose(), f) << f;
    ASSERT_TRUE(std::is_sorted(fac.poly_factors.begin(), fac.poly_factors.end()));
    for (const auto& [p, m] : fac.poly_factors) {
      ASSERT_GT(p.leading().sign(), 0);
      ASSERT_EQ(content(p), BigInt(1));
      ASSERT_GE(m, 1U);
    }
  }
}

TEST(Factor, FactorsOfSmallPolynomialsAreIrreducible) {
  // Independent check: degree <= 5 factors have no factor of degree <= 2.
  for (int i = 0; i < 150; ++i) {
    const IntPoly f = random_poly(static_cast<int>(uniform(1, 3)), 6) * random_poly(static_cast<int>(uniform(1, 3)), 6);
    for (const auto& [p, m] : factor(f).poly_factors) {
      if (p.degree() >= 2 && p.degree() <= 5) {
        ASSERT_FALSE(has_factor_of_degree_at_most_two(p)) << p << " from " << f;
      }
    }
  }
}

TEST(Factor, ProductOfKnownIrreduciblesIsRecovered) {
  for (int i = 0; i < 100; ++i) {
    std::vector<IntPoly> expected;
    IntPoly f(1);
    for (int k = 0; k < 3; ++k) {
      IntPoly g = normalized_primitive(random_poly(static_cast<int>(uniform(1, 4)), 12));
      if (g.degree() <= 0 || (g.degree() >= 2 && has_factor_of_degree_at_most_two(g)) ||
          (g.degree() >= 6)) {
        continue;
      }
      if (std::find(expected.begin(), expected.end(), g) != expected.end()) continue;
      expected.push_back(g);
      f = f * g;
    }
    std::sort(expected.begin(), expected.end());
    if (expected.empty()) continue;
    ASSERT_EQ(irreducibles(factor(f)), expected) << f;
  }
}

TEST(RationalRoots, Examples) {
  EXPECT_EQ(rational_roots(P("(2*t - 1)*(t + 3)^2*(t^2 + 1)")),
            (std::vector<BigRat>{BigRat(-3), BigRat::from_string("1/2")}));
  EXPECT_TRUE(rational_roots(P("t^3 + t + 1")).empty());
  EXPECT_EQ(rational_roots(P("t^3 + 2*t + 12")), (std::vector<BigRat>{BigRat(-2)}));
  EXPECT_TRUE(rational_roots(P("5")).empty());
}

}  // namespace
}  // namespace ellspec
