#include "ellspec/int_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ellspec/factor_int.hpp"

namespace ellspec {
namespace {

const BigInt& zero_coeff() {
  static const BigInt z{0};
  return z;
}

}  // namespace

IntPoly::IntPoly(const BigInt& c) {
  if (!c.is_zero()) {
    c_.push_back(c);
  }
}

IntPoly::IntPoly(std::vector<BigInt> coeffs_low_first) : c_(std::move(coeffs_low_first)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  if (c.is_zero()) {
    return {};
  }
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) {
    c_.pop_back();
  }
}

const BigInt& IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_coeff(); }

const BigInt& IntPoly::leading() const { return c_.empty() ? zero_coeff() : c_.back(); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size(), BigInt(0));
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
  }
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size(), BigInt(0));
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] -= o.c_[i];
  }
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<mpz_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    const auto ai = a.c_[i].mpz().get_mpz_t();
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), ai, b.c_[j].mpz().get_mpz_t());
    }
  }
  std::vector<BigInt> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) {
    return a.degree() < b.degree();
  }
  for (int i = a.degree(); i >= 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    if (a.c_[k] != b.c_[k]) {
      return a.c_[k] < b.c_[k];
    }
  }
  return false;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) {
    return {};
  }
  std::vector<BigInt> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(c_[i] * BigInt(static_cast<long>(i)));
  }
  return IntPoly(std::move(d));
}

BigInt IntPoly::eval(const BigInt& t0) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * t0.mpz() + it->mpz();
  }
  return BigInt(std::move(acc));
}

BigRat IntPoly::eval(const BigRat& t0) const {
  if (c_.empty()) {
    return BigRat(0);
  }
  // Homogenized Horner: sum c_i n^i d^(deg - i), then divide by d^deg.
  const mpz_class& n = t0.num().mpz();
  const mpz_class& d = t0.den().mpz();
  mpz_class acc = 0;
  mpz_class dpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * n + it->mpz() * dpow;
    dpow *= d;
  }
  // dpow is now d^(deg + 1); one factor too many.
  mpz_class den = dpow / d;
  return BigRat(BigInt(std::move(acc)), BigInt(std::move(den)));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const BigInt mag = abs(c);
    if (i == 0) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

IntPoly pow(const IntPoly& p, unsigned long exponent) {
  IntPoly result(1);
  IntPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigInt content(const IntPoly& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("content of the zero polynomial");
  }
  BigInt g(0);
  for (const auto& c : p.coefficients()) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) { return divexact(p, content(p)); }

IntPoly normalized_primitive(const IntPoly& p) {
  IntPoly r = primitive_part(p);
  return r.leading().sign() < 0 ? -r : r;
}

IntPoly divexact(const IntPoly& p, const BigInt& k) {
  if (k.is_one()) {
    return p;
  }
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(divexact(c, k));
  return IntPoly(std::move(out));
}

std::optional<IntPoly> try_divexact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  if (p.is_zero()) {
    return IntPoly{};
  }
  if (p.degree() < d.degree()) {
    return std::nullopt;
  }
  const BigInt& lc = d.leading();
  std::vector<mpz_class> rem;
  rem.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) rem.push_back(c.mpz());
  const auto dn = static_cast<std::size_t>(d.degree());
  std::vector<BigInt> quot(static_cast<std::size_t>(p.degree() - d.degree()) + 1, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + dn];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lc.mpz().get_mpz_t()) == 0) {
      return std::nullopt;
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.mpz().get_mpz_t());
    for (std::size_t j = 0; j <= dn; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), d.coefficients()[j].mpz().get_mpz_t());
    }
    quot[k] = BigInt(std::move(q));
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (rem[j] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly divexact(const IntPoly& p, const IntPoly& d) {
  auto q = try_divexact(p, d);
  if (!q) {
    throw std::domain_error("inexact polynomial division (" + p.to_string() + ") / (" +
                            d.to_string() + ")");
  }
  return std::move(*q);
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) {
    throw std::domain_error("pseudo-division by zero");
  }
  if (a.degree() < b.degree()) {
    return {IntPoly{}, a};
  }
  const BigInt& lc = b.leading();
  const int db = b.degree();
  IntPoly r = a;
  IntPoly q;
  int steps = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    const IntPoly term = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db));
    q = q * lc + term;
    r = r * lc - term * b;
    --steps;
  }
  if (steps > 0) {
    const BigInt scale = pow(lc, static_cast<unsigned long>(steps));
    q *= scale;
    r *= scale;
  }
  return {q, r};
}

namespace {

BigInt max_norm(const IntPoly& p) {
  BigInt m(0);
  for (const BigInt& c : p.coefficients()) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

// Heuristic gcd of primitive polynomials with positive leading coefficients:
// gcd of the values at a large integer xi, read back as balanced xi-adic digits.
// A candidate that divides both inputs is the gcd.
std::optional<IntPoly> gcd_heuristic(const IntPoly& x, const IntPoly& y) {
  BigInt xi = BigInt(2) * std::min(max_norm(x), max_norm(y)) + BigInt(29);
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (xi.bit_length() * static_cast<std::size_t>(std::max(x.degree(), y.degree())) > 200000) break;
    BigInt v = gcd(x.eval(xi), y.eval(xi));
    std::vector<BigInt> digits;
    while (!v.is_zero()) {
      BigInt d = mod(v, xi);
      if (BigInt(2) * d > xi) d -= xi;
      digits.push_back(d);
      v = divexact(v - d, xi);
    }
    const IntPoly h(std::move(digits));
    if (!h.is_zero()) {
      const IntPoly g = normalized_primitive(h);
      if (try_divexact(x, g) && try_divexact(y, g)) return g;
    }
    xi = tdiv(xi * BigInt(73794), BigInt(27011));
  }
  return std::nullopt;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) {
    return b.is_zero() ? IntPoly{} : (b.leading().sign() < 0 ? -b : b);
  }
  if (b.is_zero()) {
    return a.leading().sign() < 0 ? -a : a;
  }
  const BigInt c = gcd(content(a), content(b));
  IntPoly x = normalized_primitive(a);
  IntPoly y = normalized_primitive(b);
  if (x.degree() == 0 || y.degree() == 0) {
    return IntPoly(c);
  }
  if (auto h = gcd_heuristic(x, y)) {
    return *h * c;
  }
  if (x.degree() < y.degree()) std::swap(x, y);
  // Primitive polynomial remainder sequence.
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      return IntPoly(c);
    }
    IntPoly r = pseudo_divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? IntPoly{} : primitive_part(r);
  }
  return normalized_primitive(x) * c;
}

SquarefreeDecomposition squarefree_decompose(const IntPoly& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("square-free decomposition of the zero polynomial");
  }
  SquarefreeDecomposition out;
  out.unit = p.leading().sign();
  out.content = content(p);
  IntPoly f = normalized_primitive(p);
  if (f.degree() <= 0) {
    return out;
  }
  // Yun: every division below is by a primitive divisor in Q[t], so exact in Z[t].
  const IntPoly fp = f.derivative();
  const IntPoly a0 = normalized_primitive(gcd(f, fp));
  IntPoly b = divexact(f, a0);
  IntPoly c = divexact(fp, a0);
  IntPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    IntPoly a = d.is_zero() ? b : normalized_primitive(gcd(b, d));
    b = divexact(b, a);
    c = divexact(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) {
      out.parts.emplace_back(std::move(a), i);
    }
    ++i;
  }
  return out;
}

bool is_squarefree(const IntPoly& p) {
  const auto sq = squarefree_decompose(p);
  return std::all_of(sq.parts.begin(), sq.parts.end(), [](const auto& pm) { return pm.second == 1; });
}

IntPoly radical(const IntPoly& p) {
  const auto sq = squarefree_decompose(p);
  IntPoly r(BigInt(1));
  for (const auto& pp : factor_int(sq.content).factors) r *= pp.prime;
  for (const auto& [part, m] : sq.parts) r *= part;
  return r;
}

IntPoly squarefree_kernel(const IntPoly& p) {
  const auto sq = squarefree_decompose(p);
  IntPoly r(squarefree_part(BigInt(sq.unit) * sq.content));
  for (const auto& [part, m] : sq.parts) {
    if (m % 2 == 1) r *= part;
  }
  return r;
}

std::optional<IntPoly> poly_sqrt(const IntPoly& p) {
  if (p.is_zero()) {
    return IntPoly{};
  }
  if (p.degree() % 2 != 0 || p.leading().sign() < 0) {
    return std::nullopt;
  }
  const auto lead = exact_sqrt(p.leading());
  if (!lead) {
    return std::nullopt;
  }
  // Top-down coefficient solve: r_m = sqrt(lc), then each lower coefficient is
  // forced by the coefficient of t^(2m - k) and must be an integer.
  const auto m = static_cast<std::size_t>(p.degree() / 2);
  std::vector<BigInt> r(m + 1, BigInt(0));
  r[m] = *lead;
  const BigInt two_lead = *lead * BigInt(2);
  for (std::size_t k = 1; k <= m; ++k) {
    BigInt acc = p.coeff(2 * m - k);
    for (std::size_t j = 1; j < k; ++j) {
      acc -= r[m - j] * r[m - (k - j)];
    }
    if (!divides(two_lead, acc)) {
      return std::nullopt;
    }
    r[m - k] = divexact(acc, two_lead);
  }
  IntPoly root(std::move(r));
  if (root * root != p) {
    return std::nullopt;
  }
  return root;
}

IntPoly cubic_discriminant(const IntPoly& a, const IntPoly& b, const IntPoly& c) {
  const IntPoly a2 = a * a;
  const IntPoly b2 = b * b;
  return BigInt(18) * (a * b * c) - BigInt(4) * (a2 * a * c) + a2 * b2 - BigInt(4) * (b2 * b) -
         BigInt(27) * (c * c);
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

}  // namespace ellspec
