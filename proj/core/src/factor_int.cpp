#include "ellspec/factor_int.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ellspec {
namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor of
// the odd composite n.
BigInt pollard_brent(const BigInt& n) {
  const mpz_class& N = n.mpz();
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    auto f = [&](mpz_class& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), N.get_mpz_t());
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          f(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), N.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), N.get_mpz_t());
        k += steps;
      }
      r *= 2;
    }
    if (g == N) {
      do {
        f(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), N.get_mpz_t());
      } while (g == 1);
    }
    if (g != N) {
      return BigInt(g);
    }
  }
}

void split_cofactor(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n.is_one()) {
    return;
  }
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (auto r = exact_sqrt(n)) {
    split_cofactor(*r, out);
    split_cofactor(*r, out);
    return;
  }
  const BigInt d = pollard_brent(n);
  split_cofactor(d, out);
  split_cofactor(divexact(n, d), out);
}

}  // namespace

BigInt IntFactorization::recompose() const {
  BigInt r = sign;
  for (const auto& pp : factors) {
    r *= pow(pp.prime, pp.exponent);
  }
  return r;
}

bool is_probable_prime(const BigInt& n) {
  if (n.sign() <= 0) {
    return false;
  }
  return mpz_probab_prime_p(n.mpz().get_mpz_t(), 32) != 0;
}

IntFactorization factor_int(const BigInt& n) {
  if (n.is_zero()) {
    throw std::invalid_argument("factor_int: zero has no factorization");
  }
  IntFactorization result;
  result.sign = n.sign();
  mpz_class rest = ::abs(n.mpz());
  std::map<BigInt, unsigned> found;

  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) {
      found[BigInt(p)] += e;
    }
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel.
  for (unsigned long p = 5; p <= kTrialLimit; p += 6) {
    if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) {
      break;
    }
    strip(p);
    strip(p + 2);
  }
  split_cofactor(BigInt(rest), found);

  for (auto& [p, e] : found) {
    result.factors.push_back({p, e});
  }
  return result;
}

BigInt squarefree_part(const BigInt& n) {
  const auto f = factor_int(n);
  BigInt r = f.sign;
  for (const auto& pp : f.factors) {
    if (pp.exponent % 2 == 1) {
      r *= pp.prime;
    }
  }
  return r;
}

}  // namespace ellspec
