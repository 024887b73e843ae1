#include <gtest/gtest.h>

#include "ellspec/expression.hpp"
#include "ellspec/int_poly.hpp"
#include "ellspec/rat_func.hpp"
#include "test_support.hpp"

namespace ellspec {
namespace {

using testing::random_poly;
using testing::random_rat;
using testing::uniform;

IntPoly P(const char* s) { return parse_poly(s); }

TEST(IntPoly, PrintsDescendingPowers) {
  EXPECT_EQ(P("9 - 30*t^3 + 3*t^4").to_string(), "3*t^4 - 30*t^3 + 9");
  EXPECT_EQ(P("-t").to_string(), "-t");
  EXPECT_EQ(P("t - t").to_string(), "0");
  EXPECT_EQ(P("(t+1)^2").to_string(), "t^2 + 2*t + 1");
  EXPECT_EQ(P("-2*t^2 - 1").to_string(), "-2*t^2 - 1");
}

TEST(IntPoly, PrintParseRoundTrip) {
  for (int i = 0; i < 200; ++i) {
    const IntPoly f = random_poly(static_cast<int>(uniform(0, 9)), 1000);
    ASSERT_EQ(parse_poly(f.to_string()), f) << f;
  }
}

TEST(IntPoly, ContentAndPrimitivePart) {
  EXPECT_EQ(content(P("6*t^2 - 4*t + 10")), BigInt(2));
  EXPECT_EQ(content(P("-3")), BigInt(3));
  EXPECT_EQ(primitive_part(P("-6*t + 4")), P("-3*t + 2"));
  EXPECT_EQ(normalized_primitive(P("-6*t + 4")), P("3*t - 2"));
  EXPECT_THROW(content(IntPoly{}), std::invalid_argument);
}

TEST(IntPoly, GaussLemma) {
  for (int i = 0; i < 300; ++i) {
    const IntPoly f = random_poly(static_cast<int>(uniform(0, 6)), 50);
    const IntPoly g = random_poly(static_cast<int>(uniform(0, 6)), 50);
    ASSERT_EQ(content(f * g), content(f) * content(g));
  }
}

TEST(IntPoly, EvalIsRingHomomorphism) {
  for (int i = 0; i < 300; ++i) {
    const IntPoly f = random_poly(static_cast<int>(uniform(0, 6)), 100);
    const IntPoly g = random_poly(static_cast<int>(uniform(0, 6)), 100);
    const BigRat r = random_rat(50);
    ASSERT_EQ((f * g).eval(r), f.eval(r) * g.eval(r));
    ASSERT_EQ((f + g).eval(r), f.eval(r) + g.eval(r));
  }
  EXPECT_EQ(P("t^2 - 2").eval(BigRat::from_string("3/2")), BigRat::from_string("1/4"));
  EXPECT_EQ(P("t^3 + 1").eval(BigInt(-1)), BigInt(0));
}

TEST(IntPoly, ExactDivision) {
  EXPECT_EQ(divexact(P("t^2 - 1"), P("t + 1")), P("t - 1"));
  EXPECT_FALSE(try_divexact(P("t^2 + 1"), P("t + 1")));
  EXPECT_FALSE(try_divexact(P("t^2 - 1"), P("2*t + 2")));
  EXPECT_THROW(divexact(P("t + 1"), BigInt(2)), std::domain_error);
}

TEST(IntPoly, PseudoDivisionIdentity) {
  for (int i = 0; i < 200; ++i) {
    const IntPoly a = random_poly(static_cast<int>(uniform(0, 8)), 30);
    const IntPoly b = random_poly(static_cast<int>(uniform(0, 5)), 30);
    const auto [q, r] = pseudo_divmod(a, b);
    const int k = std::max(a.degree() - b.degree() + 1, 0);
    ASSERT_EQ(pow(IntPoly(b.leading()), static_cast<unsigned>(k)) * a, q * b + r);
    ASSERT_LT(r.degree(), b.degree());
  }
}

TEST(IntPoly, GcdOfProducts) {
  for (int i = 0; i < 200; ++i) {
    const IntPoly g = normalized_primitive(random_poly(static_cast<int>(uniform(1, 4)), 20));
    const IntPoly a = random_poly(static_cast<int>(uniform(0, 4)), 20) * g;
    const IntPoly b = random_poly(static_cast<int>(uniform(0, 4)), 20) * g;
    const IntPoly d = gcd(a, b);
    ASSERT_TRUE(try_divexact(d, g)) << a << " , " << b;
    ASSERT_TRUE(try_divexact(a, d));
    ASSERT_TRUE(try_divexact(b, d));
    ASSERT_GT(d.leading().sign(), 0);
  }
  EXPECT_EQ(gcd(P("6*t + 6"), P("4*t^2 - 4")), P("2*t + 2"));
  EXPECT_EQ(gcd(IntPoly{}, P("-3*t")), P("3*t"));
}

TEST(IntPoly, SquarefreeDecomposition) {
  const auto d = squarefree_decompose(P("-12*(t - 1)^2*(t^2 + 1)^3*t"));
  EXPECT_EQ(d.unit, -1);
  EXPECT_EQ(d.content, BigInt(12));
  ASSERT_EQ(d.parts.size(), 3U);
  EXPECT_EQ(d.parts[0], (std::pair<IntPoly, unsigned>{P("t"), 1}));
  EXPECT_EQ(d.parts[1], (std::pair<IntPoly, unsigned>{P("t - 1"), 2}));
  EXPECT_EQ(d.parts[2], (std::pair<IntPoly, unsigned>{P("t^2 + 1"), 3}));
}

TEST(IntPoly, SquarefreeDecompositionRecomposes) {
  for (int i = 0; i < 200; ++i) {
    IntPoly f = random_poly(static_cast<int>(uniform(0, 3)), 10);
    f = f * pow(random_poly(static_cast<int>(uniform(1, 2)), 10), static_cast<unsigned>(uniform(1, 3)));
    const auto d = squarefree_decompose(f);
    IntPoly r(BigInt(d.unit) * d.content);
    for (const auto& [p, m] : d.parts) {
      ASSERT_TRUE(is_squarefree(p));
      ASSERT_GT(p.degree(), 0);
      r = r * pow(p, m);
    }
    ASSERT_EQ(r, f);
  }
}

TEST(IntPoly, RadicalAndKernel) {
  EXPECT_EQ(radical(P("4*(t - 1)^2")), P("2*t - 2"));
  EXPECT_EQ(radical(P("-t^3")), P("t"));
  EXPECT_EQ(squarefree_kernel(P("-8*(t - 1)^2*(t + 3)^3")), P("-2*t - 6"));
  EXPECT_EQ(squarefree_kernel(P("9*t^4")), P("1"));
  EXPECT_FALSE(is_squarefree(P("(t^2 + 1)^2 * (t + 5)")));
  EXPECT_TRUE(is_squarefree(P("4*(t^2 + 1)")));
}

TEST(IntPoly, KernelTimesSquare) {
  for (int i = 0; i < 200; ++i) {
    const IntPoly f = random_poly(static_cast<int>(uniform(0, 4)), 20) *
                      pow(random_poly(static_cast<int>(uniform(0, 2)), 8), 2);
    const IntPoly k = squarefree_kernel(f);
    const auto q = try_divexact(f, k);
    ASSERT_TRUE(q) << f;
    ASSERT_TRUE(poly_sqrt(*q)) << f;
  }
}

TEST(IntPoly, Sqrt) {
  EXPECT_EQ(poly_sqrt(P("4*t^2 - 12*t + 9")), P("2*t - 3"));
  EXPECT_FALSE(poly_sqrt(P("t^2 + 1")));
  EXPECT_FALSE(poly_sqrt(P("-t^2")));
  EXPECT_EQ(poly_sqrt(IntPoly{}), IntPoly{});
}

TEST(IntPoly, CubicDiscriminant) {
  // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6; disc = prod (ei - ej)^2 = 1 * 16 * 25
  EXPECT_EQ(cubic_discriminant(P("0"), P("-7"), P("6")), P("400"));
  // x^3 + x^2 (double root at 0)
  EXPECT_EQ(cubic_discriminant(P("1"), P("0"), P("0")), P("0"));
  // C = 0: disc = B^2 (A^2 - 4B)
  const IntPoly a = P("t^2"), b = P("-1");
  EXPECT_EQ(cubic_discriminant(a, b, IntPoly{}), b * b * (a * a - BigInt(4) * b));
}

TEST(RatFunc, CanonicalForm) {
  const RatFunc x = parse_rat_func("(t + 1) / 2");
  EXPECT_EQ(x.num(), P("t + 1"));
  EXPECT_EQ(x.den(), P("2"));
  const RatFunc y = parse_rat_func("(2*t^2 - 2) / (-4*t - 4)");
  EXPECT_EQ(y.num(), P("-t + 1"));
  EXPECT_EQ(y.den(), P("2"));
  EXPECT_EQ(parse_rat_func("t / t"), RatFunc(1));
  EXPECT_THROW(RatFunc(P("t"), IntPoly{}), std::domain_error);
  EXPECT_THROW(RatFunc(1) / RatFunc(0), std::domain_error);
}

TEST(RatFunc, FieldAxiomsOnRandomElements) {
  for (int i = 0; i < 100; ++i) {
    const RatFunc a(random_poly(static_cast<int>(uniform(0, 3)), 9), random_poly(static_cast<int>(uniform(0, 3)), 9));
    const RatFunc b(random_poly(static_cast<int>(uniform(0, 3)), 9), random_poly(static_cast<int>(uniform(0, 3)), 9));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a * b) / b, a);
    ASSERT_EQ(a - a, RatFunc(0));
    ASSERT_EQ(a * a.inverse(), RatFunc(1));
  }
}

TEST(RatFunc, DegreeAsMap) {
  EXPECT_EQ(deg_map(parse_rat_func("(t^3 + 1) / (t - 2)")), 3);
  EXPECT_EQ(deg_map(parse_rat_func("1 / (t^2 + 1)")), 2);
  EXPECT_EQ(deg_map(RatFunc(5)), 0);
  EXPECT_THROW(deg_map(RatFunc(0)), std::invalid_argument);
}

TEST(RatFunc, EvalAndPoles) {
  const RatFunc x = parse_rat_func("(t^2 + 1) / (t - 1)");
  EXPECT_EQ(eval_rf(x, BigRat(3)), BigRat(5));
  EXPECT_FALSE(eval_rf(x, BigRat(1)));
}

TEST(RatFunc, SquareTest) {
  EXPECT_EQ(is_square_rf(parse_rat_func("4*(t + 1)^2 / (9*t^4)")), parse_rat_func("2*(t + 1) / (3*t^2)"));
  EXPECT_FALSE(is_square_rf(parse_rat_func("-(t + 1)^2")));
  EXPECT_FALSE(is_square_rf(parse_rat_func("2*t^2")));
  EXPECT_FALSE(is_square_rf(parse_rat_func("t")));
  for (int i = 0; i < 100; ++i) {
    const RatFunc r(random_poly(static_cast<int>(uniform(0, 3)), 20), random_poly(static_cast<int>(uniform(0, 3)), 20));
    const auto s = is_square_rf(r * r);
    ASSERT_TRUE(s);
    ASSERT_EQ(*s * *s, r * r);
  }
}

TEST(Expression, ParseErrorsCarryOffsets) {
  try {
    parse_poly("t^");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  try {
    parse_poly("3*t + z");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6U);
  }
  EXPECT_THROW(parse_poly("(t + 1"), ParseError);
  EXPECT_THROW(parse_poly("t / 2"), ParseError);
  EXPECT_THROW(parse_rat_func("1 / (t - t)"), ParseError);
  EXPECT_THROW(parse_poly("x + 1"), ParseError);
}

TEST(Expression, CurveEquationVariables) {
  const XYPoly e = parse_expression("y^2 - (x^3 + t^2*x^2 - x)", "txy");
  EXPECT_EQ(e.coeff(0, 2), RatFunc(1));
  EXPECT_EQ(e.coeff(3, 0), RatFunc(-1));
  EXPECT_EQ(e.coeff(2, 0), -RatFunc(P("t^2")));
  EXPECT_EQ(e.coeff(1, 0), RatFunc(1));
  EXPECT_THROW(parse_expression("1 / x", "txy"), ParseError);
}

}  // namespace
}  // namespace ellspec
