#include "ellspec/specialize.hpp"

#include <stdexcept>

namespace ellspec {

namespace {

BigRat at(const RatFunc& f, const BigRat& t0) {
  auto v = eval_rf(f, t0);
  if (!v) throw std::domain_error("coefficient " + f.to_string() + " has a pole at t0 = " + t0.to_string());
  return *v;
}

// Entry order 0, 1, -1, 2, -2, ...
long entry(long rank) { return rank == 0 ? 0 : (rank % 2 == 1 ? (rank + 1) / 2 : -(rank / 2)); }

}  // namespace

CurveQ specialize_curve(const CurveQt& curve, const BigRat& t0) {
  const BigRat a = at(curve.A(), t0), b = at(curve.B(), t0), c = at(curve.C(), t0);
  try {
    if (curve.split_roots()) {
      const auto& e = *curve.split_roots();
      return CurveQ::from_roots(at(e[0], t0), at(e[1], t0), at(e[2], t0));
    }
    return CurveQ::from_coefficients(a, b, c);
  } catch (const SingularCurveError&) {
    throw std::domain_error("discriminant vanishes at t0 = " + t0.to_string());
  }
}

PointQ specialize_point(const CurveQt& curve, const PointQt& p, const BigRat& t0) {
  curve.require_on_curve(p);
  if (p.is_infinity()) return PointQ();
  auto x = eval_rf(p.x(), t0);
  if (!x) return PointQ();
  // y^2 = f(x) with x finite, so y is finite as well.
  return PointQ(*x, at(p.y(), t0));
}

bool homomorphism_check(const CurveQt& curve, const PointQt& p, const PointQt& q, const BigRat& t0) {
  const CurveQ e0 = specialize_curve(curve, t0);
  const PointQ lhs = specialize_point(curve, curve.add(p, q), t0);
  const PointQ rhs = e0.add(specialize_point(curve, p, t0), specialize_point(curve, q, t0));
  return lhs == rhs;
}

std::optional<std::vector<long>> relation_search(const CurveQ& curve, const std::vector<PointQ>& points, long bound) {
  const std::size_t k = points.size();
  if (k == 0 || bound <= 0) return std::nullopt;
  // multiples[i][r] = entry(r) * P_i for rank r in 0 .. 2 * bound.
  std::vector<std::vector<PointQ>> multiples(k);
  for (std::size_t i = 0; i < k; ++i) {
    curve.require_on_curve(points[i]);
    multiples[i].resize(static_cast<std::size_t>(2 * bound + 1));
    PointQ pos;
    for (long m = 1; m <= bound; ++m) {
      pos = curve.add_unchecked(pos, points[i]);
      multiples[i][static_cast<std::size_t>(2 * m - 1)] = pos;
      multiples[i][static_cast<std::size_t>(2 * m)] = pos.is_infinity() ? pos : PointQ(pos.x(), -pos.y());
    }
  }
  for (long n = 1; n <= bound; ++n) {
    const long ranks = 2 * n + 1;
    std::vector<long> r(k, 0);
    for (;;) {
      bool on_shell = false;
      for (long v : r) on_shell = on_shell || v >= 2 * n - 1;
      if (on_shell) {
        PointQ sum;
        for (std::size_t i = 0; i < k; ++i) sum = curve.add_unchecked(sum, multiples[i][static_cast<std::size_t>(r[i])]);
        if (sum.is_infinity()) {
          std::vector<long> out(k);
          for (std::size_t i = 0; i < k; ++i) out[i] = entry(r[i]);
          return out;
        }
      }
      // Next vector in lexicographic order of ranks.
      std::size_t pos = k;
      while (pos > 0 && r[pos - 1] == ranks - 1) r[--pos] = 0;
      if (pos == 0) break;
      ++r[pos - 1];
    }
  }
  return std::nullopt;
}

}  // namespace ellspec
