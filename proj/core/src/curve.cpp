#include "ellspec/curve.hpp"

#include <algorithm>

#include "ellspec/poly_factor.hpp"

namespace ellspec {

namespace {

using Series = std::vector<BigRat>;

BigInt lcm_den(std::initializer_list<const BigRat*> xs) {
  BigInt l(1);
  for (const BigRat* x : xs) l = lcm(l, x->den());
  return l;
}

// Coefficients (low first) of a polynomial element of Q(t).
Series rational_coeffs(const RatFunc& f) {
  const BigInt d = f.den().coeff(0);
  Series out;
  for (const BigInt& c : f.num().coefficients()) out.emplace_back(c, d);
  return out;
}

// p(s + t0), Horner from the top.
Series taylor_shift(const Series& p, const BigRat& t0) {
  Series r;
  for (std::size_t i = p.size(); i-- > 0;) {
    Series next(r.size() + 1);
    for (std::size_t k = 0; k < r.size(); ++k) {
      next[k + 1] += r[k];
      next[k] += r[k] * t0;
    }
    next[0] += p[i];
    r = std::move(next);
  }
  return r;
}

Series mul_trunc(const Series& a, const Series& b, std::size_t n) {
  Series r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

BigRat coeff_at(const Series& s, std::size_t k) { return k < s.size() ? s[k] : BigRat(0); }

// [s^k] of e^3 + a e^2 + b e + c.
BigRat cubic_series_coeff(const Series& e, const Series& a, const Series& b, const Series& c, std::size_t k) {
  const std::size_t n = k + 1;
  const Series e2 = mul_trunc(e, e, n);
  const Series e3 = mul_trunc(e2, e, n);
  return coeff_at(e3, k) + coeff_at(mul_trunc(a, e2, n), k) + coeff_at(mul_trunc(b, e, n), k) + coeff_at(c, k);
}

int degree_of(const RatFunc& f) { return f.num().degree(); }

RatFunc lcm_poly(const IntPoly& a, const IntPoly& b) {
  return RatFunc(divexact(a * b, gcd(a, b)));
}

}  // namespace

std::vector<BigRat> cubic_roots(const BigRat& a, const BigRat& b, const BigRat& c) {
  const BigInt l = lcm_den({&a, &b, &c});
  const IntPoly f(std::vector<BigInt>{divexact(c.num() * l, c.den()), divexact(b.num() * l, b.den()),
                                      divexact(a.num() * l, a.den()), l});
  return rational_roots(f);
}

std::vector<RatFunc> cubic_roots(const RatFunc& a, const RatFunc& b, const RatFunc& c) {
  if (a.is_constant() && b.is_constant() && c.is_constant()) {
    std::vector<RatFunc> out;
    for (const BigRat& r : cubic_roots(*a.constant_value(), *b.constant_value(), *c.constant_value())) {
      out.emplace_back(r);
    }
    return out;
  }
  // Clear denominators with x = X / u^2; the monic cubic then has Q[t]
  // coefficients, so its Q(t)-roots lie in Q[t].
  RatFunc u = lcm_poly(lcm_poly(a.den(), b.den()).num(), c.den());
  const RatFunc u2 = u * u;
  const RatFunc a2 = a * u2;
  const RatFunc b2 = b * u2 * u2;
  const RatFunc c2 = c * u2 * u2 * u2;

  int bound = 0;
  if (!a2.is_zero()) bound = std::max(bound, degree_of(a2));
  if (!b2.is_zero()) bound = std::max(bound, (degree_of(b2) + 1) / 2);
  if (!c2.is_zero()) bound = std::max(bound, (degree_of(c2) + 2) / 3);

  const RatFunc disc = RatFunc(18) * a2 * b2 * c2 - RatFunc(4) * a2 * a2 * a2 * c2 + a2 * a2 * b2 * b2 -
                       RatFunc(4) * b2 * b2 * b2 - RatFunc(27) * c2 * c2;
  if (disc.is_zero()) {
    throw std::domain_error("cubic_roots: repeated roots");
  }
  // A base point where the specialized cubic keeps three distinct roots; each
  // rational root there lifts uniquely to a power series root.
  BigRat t0(0);
  for (long k = 1; disc.num().eval(t0).is_zero(); ++k) t0 = BigRat(k % 2 == 1 ? (k + 1) / 2 : -(k / 2));

  const Series as = taylor_shift(rational_coeffs(a2), t0);
  const Series bs = taylor_shift(rational_coeffs(b2), t0);
  const Series cs = taylor_shift(rational_coeffs(c2), t0);
  const BigRat a0 = coeff_at(as, 0), b0 = coeff_at(bs, 0), c0 = coeff_at(cs, 0);

  std::vector<RatFunc> out;
  for (const BigRat& r0 : cubic_roots(a0, b0, c0)) {
    const BigRat slope = (BigRat(3) * r0 + BigRat(2) * a0) * r0 + b0;
    Series e{r0};
    for (int k = 1; k <= bound; ++k) {
      e.push_back(BigRat(0));
      e.back() = -cubic_series_coeff(e, as, bs, cs, static_cast<std::size_t>(k)) / slope;
    }
    RatFunc root;
    const RatFunc shift = RatFunc::var() - RatFunc(t0);
    for (std::size_t i = e.size(); i-- > 0;) root = root * shift + RatFunc(e[i]);
    if ((((root + a2) * root + b2) * root + c2).is_zero()) {
      out.push_back(root / u2);
    }
  }
  return out;
}

bool has_nonconstant_j(const CurveQt& e) { return !e.j_invariant().is_constant(); }

XDecomposition x_decompose(const PointQt& p) {
  if (p.is_infinity()) {
    throw std::domain_error("x_decompose: point at infinity");
  }
  auto q = poly_sqrt(p.x().den());
  if (!q) {
    throw std::domain_error("x_decompose: denominator " + p.x().den().to_string() + " is not a square in Z[t]");
  }
  return {p.x().num(), std::move(*q)};
}

PointQt IntegralModel::map(const PointQt& p) const {
  if (p.is_infinity()) return p;
  const RatFunc u2(BigInt(u * u));
  return PointQt(p.x() * u2, p.y() * u2 * RatFunc(u));
}

bool has_integral_coefficients(const CurveQt& e) {
  auto integral = [](const RatFunc& f) { return f.is_polynomial(); };
  if (!integral(e.A()) || !integral(e.B()) || !integral(e.C())) return false;
  if (e.split_roots()) {
    for (const RatFunc& r : *e.split_roots()) {
      if (!integral(r)) return false;
    }
  }
  return true;
}

IntegralModel integral_model(const CurveQt& e) {
  BigInt u(1);
  auto absorb = [&u](const RatFunc& f, unsigned weight) {
    if (f.den().degree() > 0) {
      throw std::domain_error("integral_model: coefficient " + f.to_string() + " is not a polynomial");
    }
    // u^weight must clear the denominator.
    const BigInt d = f.den().coeff(0);
    BigInt need(1);
    for (const PrimePower& pp : factor_int(d).factors) {
      need *= pow(pp.prime, (pp.exponent + weight - 1) / weight);
    }
    u = lcm(u, need);
  };
  absorb(e.A(), 2);
  absorb(e.B(), 4);
  absorb(e.C(), 6);
  if (e.split_roots()) {
    for (const RatFunc& r : *e.split_roots()) absorb(r, 2);
  }
  const RatFunc u2(BigInt(u * u));
  if (e.split_roots()) {
    const auto& r = *e.split_roots();
    return {CurveQt::from_roots(r[0] * u2, r[1] * u2, r[2] * u2), u};
  }
  return {CurveQt::from_coefficients(e.A() * u2, e.B() * u2 * u2, e.C() * u2 * u2 * u2), u};
}

CurveQt shift_x(const CurveQt& curve, const RatFunc& e) {
  if (curve.split_roots()) {
    const auto& r = *curve.split_roots();
    return CurveQt::from_roots(r[0] - e, r[1] - e, r[2] - e);
  }
  const RatFunc& a = curve.A();
  const RatFunc& b = curve.B();
  return CurveQt::from_coefficients(a + RatFunc(3) * e, RatFunc(3) * e * e + RatFunc(2) * a * e + b, curve.rhs(e));
}

}  // namespace ellspec
