#include "ellspec/poly_factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "modular_poly.hpp"

namespace ellspec {
namespace {

using detail::ModField;
using detail::ModPoly;

constexpr int kCandidatePrimes = 5;

IntPoly from_mod(const ModPoly& a) {
  std::vector<BigInt> c;
  c.reserve(a.size());
  for (auto v : a) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

IntPoly reduce_mod(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) c.push_back(mod(v, m));
  return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& f, const BigInt& m) {
  const BigInt half = tdiv(m, BigInt(2));
  std::vector<BigInt> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) {
    BigInt r = mod(v, m);
    if (r > half) r -= m;
    c.push_back(std::move(r));
  }
  return IntPoly(std::move(c));
}

// Lifts f = g0 * h0 (mod p), g0 monic, to f = g * h (mod p^k) one power of p at a time.
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const ModPoly& g0, const ModPoly& h0,
                                        const ModField& field, unsigned k) {
  const auto [s, t] = field.bezout(g0, h0);
  const BigInt p(static_cast<unsigned long>(field.prime()));
  IntPoly g = from_mod(g0);
  IntPoly h = from_mod(h0);
  BigInt q = p;
  for (unsigned j = 1; j < k; ++j) {
    const IntPoly err = divexact(f - g * h, q);
    const ModPoly e = field.reduce(err);
    if (!e.empty()) {
      const ModPoly sigma = field.mul(t, e);
      auto [quo, dg] = field.divmod(sigma, g0);
      const ModPoly dh = field.add(field.mul(s, e), field.mul(quo, h0));
      g += from_mod(dg) * q;
      h += from_mod(dh) * q;
    }
    q *= p;
  }
  return {reduce_mod(g, q), reduce_mod(h, q)};
}

// Lifts the factorization f = lc * prod(factors) (mod p) to monic factors mod p^k.
void hensel_tree(const IntPoly& f, const BigInt& lc, std::vector<ModPoly> factors,
                 const ModField& field, unsigned k, const BigInt& modulus,
                 std::vector<IntPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(reduce_mod(f * invert_mod(lc, modulus), modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ModPoly g0{1};
  for (const auto& u : left) g0 = field.mul(g0, u);
  const BigInt p(static_cast<unsigned long>(field.prime()));
  ModPoly h0{static_cast<std::uint64_t>(mod(lc, p).to_long())};
  for (const auto& u : right) h0 = field.mul(h0, u);
  auto [g, h] = hensel_pair(f, g0, h0, field, k);
  hensel_tree(g, BigInt(1), std::move(left), field, k, modulus, out);
  hensel_tree(h, lc, std::move(right), field, k, modulus, out);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) {
    return {f};
  }
  const BigInt& lc = f.leading();

  // Choose among a few good primes the one giving the fewest modular factors.
  std::mt19937_64 rng(0x5eedULL);
  std::vector<ModPoly> best_factors;
  std::uint64_t best_prime = 0;
  int tried = 0;
  for (std::uint64_t p = 3; tried < kCandidatePrimes; p += 2) {
    if (!is_probable_prime(BigInt(static_cast<unsigned long>(p)))) continue;
    if (divides(BigInt(static_cast<unsigned long>(p)), lc)) continue;
    const ModField field(p);
    const ModPoly fp = field.reduce(f);
    if (detail::mdeg(fp) != n) continue;
    if (detail::mdeg(field.gcd(fp, field.derivative(fp))) != 0) continue;
    auto facs = field.factor_squarefree(fp, rng);
    ++tried;
    if (best_prime == 0 || facs.size() < best_factors.size()) {
      best_prime = p;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() <= 1) {
    return {f};
  }

  // Factor coefficient bound: |lc| * 2^n * ||f||_2 for lc * (any factor).
  BigInt norm2(0);
  for (const auto& c : f.coefficients()) norm2 += c * c;
  const BigInt bound = BigInt(2) * abs(lc) * pow(BigInt(2), static_cast<unsigned long>(n)) *
                       (isqrt(norm2) + BigInt(1));
  const BigInt p(static_cast<unsigned long>(best_prime));
  BigInt modulus = p;
  unsigned k = 1;
  while (modulus <= bound) {
    modulus *= p;
    ++k;
  }

  const ModField field(best_prime);
  std::vector<IntPoly> lifted;
  hensel_tree(f, lc, best_factors, field, k, modulus, lifted);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    bool split = false;
    do {
      IntPoly cand(rest.leading());
      for (auto i : idx) cand = reduce_mod(cand * lifted[i], modulus);
      cand = symmetric_mod(cand, modulus);
      if (cand.degree() <= 0) continue;
      cand = normalized_primitive(cand);
      if (auto quotient = try_divexact(rest, cand)) {
        found.push_back(cand);
        rest = std::move(*quotient);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
          lifted.erase(lifted.begin() + static_cast<long>(*it));
        }
        split = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!split) ++subset;
  }
  if (rest.degree() > 0) {
    found.push_back(normalized_primitive(rest));
  }
  return found;
}

}  // namespace

IntPoly Factorization::recompose() const {
  IntPoly r{BigInt(unit)};
  for (const auto& pp : content_primes) r *= pow(pp.prime, pp.exponent);
  for (const auto& [f, m] : poly_factors) r *= pow(f, m);
  return r;
}

BigInt Factorization::content() const {
  BigInt c(1);
  for (const auto& pp : content_primes) c *= pow(pp.prime, pp.exponent);
  return c;
}

std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f) {
  auto out = zassenhaus(f);
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factor(const IntPoly& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("factor: zero polynomial");
  }
  const auto sq = squarefree_decompose(p);
  Factorization out;
  out.unit = sq.unit;
  out.content_primes = factor_int(sq.content).factors;
  for (const auto& [part, m] : sq.parts) {
    for (auto& irr : zassenhaus(part)) {
      out.poly_factors.emplace_back(std::move(irr), m);
    }
  }
  std::sort(out.poly_factors.begin(), out.poly_factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<BigRat> rational_roots(const IntPoly& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("rational_roots: zero polynomial");
  }
  std::vector<BigRat> roots;
  for (const auto& [f, m] : factor(p).poly_factors) {
    if (f.degree() == 1) {
      roots.emplace_back(-f.coeff(0), f.coeff(1));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ellspec
