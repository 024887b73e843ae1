#include "modular_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellspec::detail {

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t ModField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p_;
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

ModPoly ModField::reduce(const IntPoly& f) const {
  ModPoly out;
  out.reserve(f.coefficients().size());
  const BigInt p(static_cast<unsigned long>(p_));
  for (const auto& c : f.coefficients()) {
    out.push_back(static_cast<std::uint64_t>(mod(c, p).to_long()));
  }
  mtrim(out);
  return out;
}

ModPoly ModField::add(const ModPoly& a, const ModPoly& b) const {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
  mtrim(r);
  return r;
}

ModPoly ModField::sub(const ModPoly& a, const ModPoly& b) const {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
  mtrim(r);
  return r;
}

ModPoly ModField::mul(const ModPoly& a, const ModPoly& b) const {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
  }
  mtrim(r);
  return r;
}

ModPoly ModField::scale(const ModPoly& a, std::uint64_t k) const {
  ModPoly r = a;
  for (auto& c : r) c = mul(c, k);
  mtrim(r);
  return r;
}

std::pair<ModPoly, ModPoly> ModField::divmod(const ModPoly& a, const ModPoly& b) const {
  if (b.empty()) {
    throw std::domain_error("modular polynomial division by zero");
  }
  if (a.size() < b.size()) {
    return {ModPoly{}, a};
  }
  ModPoly r = a;
  ModPoly q(a.size() - b.size() + 1, 0);
  const std::uint64_t lc_inv = inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = mul(r[k + db], lc_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k + j] = sub(r[k + j], mul(c, b[j]));
    }
  }
  r.resize(db);
  mtrim(r);
  mtrim(q);
  return {q, r};
}

ModPoly ModField::monic(const ModPoly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

ModPoly ModField::derivative(const ModPoly& a) const {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p_);
  mtrim(d);
  return d;
}

ModPoly ModField::gcd(ModPoly a, ModPoly b) const {
  while (!b.empty()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::pair<ModPoly, ModPoly> ModField::bezout(const ModPoly& a, const ModPoly& b) const {
  // Extended Euclid keeping s_i*a + t_i*b = r_i.
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1{};
  ModPoly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    ModPoly s2 = sub(s0, mul(q, s1));
    ModPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) {
    throw std::domain_error("bezout: polynomials are not coprime modulo p");
  }
  const std::uint64_t k = inv(r0[0]);
  return {scale(s0, k), scale(t0, k)};
}

ModPoly ModField::powmod(ModPoly base, const BigInt& exponent, const ModPoly& modulus) const {
  ModPoly result{1};
  base = rem(base, modulus);
  const std::size_t bits = exponent.bit_length();
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), modulus);
    if (mpz_tstbit(exponent.mpz().get_mpz_t(), i) != 0) {
      result = rem(mul(result, base), modulus);
    }
  }
  return rem(result, modulus);
}

void ModField::equal_degree_split(const ModPoly& f, unsigned d, std::mt19937_64& rng,
                                  std::vector<ModPoly>& out) const {
  if (static_cast<unsigned>(mdeg(f)) == d) {
    out.push_back(f);
    return;
  }
  const BigInt exponent =
      divexact(ellspec::pow(BigInt(static_cast<unsigned long>(p_)), d) - BigInt(1), BigInt(2));
  std::uniform_int_distribution<std::uint64_t> coin(0, p_ - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(mdeg(f)));
    for (auto& c : a) c = coin(rng);
    mtrim(a);
    if (mdeg(a) < 1) continue;
    ModPoly b = sub(powmod(a, exponent, f), ModPoly{1});
    ModPoly g = gcd(f, b);
    if (mdeg(g) > 0 && mdeg(g) < mdeg(f)) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(monic(divmod(f, g).first), d, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> ModField::factor_squarefree(const ModPoly& f_in, std::mt19937_64& rng) const {
  std::vector<ModPoly> out;
  ModPoly f = monic(f_in);
  const ModPoly x{0, 1};
  ModPoly h = x;
  const BigInt p(static_cast<unsigned long>(p_));
  for (unsigned d = 1; mdeg(f) >= 2 * static_cast<int>(d); ++d) {
    h = powmod(h, p, f);
    ModPoly g = gcd(f, sub(h, x));
    if (mdeg(g) > 0) {
      equal_degree_split(g, d, rng, out);
      f = monic(divmod(f, g).first);
      h = rem(h, f);
    }
  }
  if (mdeg(f) > 0) {
    out.push_back(f);
  }
  return out;
}

}  // namespace ellspec::detail
