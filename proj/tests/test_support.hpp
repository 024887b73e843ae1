#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing here
// calls into the factorization code paths it is used to check.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "ellspec/int_poly.hpp"
#include "ellspec/rational.hpp"

namespace ellspec::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611ULL);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline IntPoly random_poly(int degree, long bound) {
  std::vector<BigInt> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(-bound, bound));
  while (c.back().is_zero()) c.back() = BigInt(uniform(1, bound));
  return IntPoly(std::move(c));
}

inline BigRat random_rat(long bound) {
  return BigRat(BigInt(uniform(-bound, bound)), BigInt(uniform(1, bound)));
}

/// Positive divisors of |n| by trial division (n != 0, small).
inline std::vector<long> small_divisors(long n) {
  if (n < 0) n = -n;
  std::vector<long> d;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      d.push_back(k);
      if (k != n / k) d.push_back(n / k);
    }
  }
  return d;
}

/// Brute-force search for a factor of degree 1 or 2 of a polynomial with small
/// coefficients. A candidate g divides f only if g(x) | f(x) at x = 1, which
/// bounds the middle coefficient to finitely many values (Kronecker's trick).
inline bool has_factor_of_degree_at_most_two(const IntPoly& f) {
  const long lc = f.leading().to_long();
  const long f0 = f.coeff(0).to_long();
  if (f0 == 0) return f.degree() > 1;  // t divides f
  // Degree 1: a*t + c with a | lc, c | f0.
  for (long a : small_divisors(lc)) {
    for (long c : small_divisors(f0)) {
      for (long s : {1L, -1L}) {
        if (f.degree() > 1 && f.eval(BigRat(BigInt(-s * c), BigInt(a))).is_zero()) return true;
      }
    }
  }
  if (f.degree() < 4) return false;  // degree 2 or 3 irreducible iff no root
  long x = 1;
  while (f.eval(BigInt(x)).is_zero()) ++x;
  const long fx = f.eval(BigInt(x)).to_long();
  for (long a : small_divisors(lc)) {
    for (long c0 : small_divisors(f0)) {
      for (long c : {c0, -c0}) {
        for (long d : small_divisors(fx)) {
          for (long v : {d, -d}) {
            // g(x) = a x^2 + b x + c = v  =>  b = (v - a x^2 - c) / x
            const long num = v - a * x * x - c;
            if (num % x != 0) continue;
            const IntPoly g(std::vector<BigInt>{BigInt(c), BigInt(num / x), BigInt(a)});
            if (try_divexact(f, g)) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace ellspec::testing

#include "ellspec/curve.hpp"

namespace ellspec::testing {

/// Coefficients (A, B, C) of the cubic model through three points with distinct
/// x-coordinates, by Cramer's rule on y_i^2 - x_i^3 = A x_i^2 + B x_i + C.
template <class F>
std::array<F, 3> model_through(const std::array<std::pair<F, F>, 3>& pts) {
  auto det3 = [](const std::array<std::array<F, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  std::array<std::array<F, 3>, 3> m;
  std::array<F, 3> r;
  for (int i = 0; i < 3; ++i) {
    const auto& [x, y] = pts[i];
    m[i] = {x * x, x, F(1)};
    r[i] = y * y - x * x * x;
  }
  const F d = det3(m);
  std::array<F, 3> out;
  for (int col = 0; col < 3; ++col) {
    auto mc = m;
    for (int i = 0; i < 3; ++i) mc[i][col] = r[i];
    out[col] = det3(mc) / d;
  }
  return out;
}

inline RatFunc random_rf_poly(int degree, long bound) { return RatFunc(random_poly(degree, bound)); }

}  // namespace ellspec::testing

namespace ellspec::testing {

/// A split curve with roots in Z[t] and one point on it: with x0, u, v, w random,
/// e1 = x0 - u, e2 = x0 - v, e3 = x0 - u v w^2 makes (x0, u v w) rational.
struct SplitSample {
  CurveQt curve;
  PointQt point;
};

inline std::optional<SplitSample> random_split_sample(int degree, long bound) {
  auto rp = [&] { return RatFunc(random_poly(static_cast<int>(uniform(0, degree)), bound)); };
  const RatFunc x0 = rp(), u = rp(), v = rp(), w = rp();
  try {
    CurveQt e = CurveQt::from_roots(x0 - u, x0 - v, x0 - u * v * w * w);
    PointQt p(x0, u * v * w);
    return SplitSample{std::move(e), std::move(p)};
  } catch (const SingularCurveError&) {
    return std::nullopt;
  }
}

}  // namespace ellspec::testing
