#include "ellspec/rat_func.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ellspec {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("rational function with zero denominator");
  }
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(BigInt(1));
    return;
  }
  // The Z[t] gcd carries both the common polynomial factor and the common content.
  const IntPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  if (den_.leading().sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::optional<BigRat> RatFunc::constant_value() const {
  if (!is_constant()) {
    return std::nullopt;
  }
  return BigRat(num_.coeff(0), den_.coeff(0));
}

std::optional<IntPoly> RatFunc::as_int_poly() const {
  if (!is_polynomial()) {
    return std::nullopt;
  }
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) {
    throw std::domain_error("division by zero in Q(t)");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

RatFunc RatFunc::inverse() const { return RatFunc(1) / *this; }

std::string RatFunc::to_string() const {
  if (is_polynomial()) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc pow(const RatFunc& base, unsigned long exponent) {
  return RatFunc(pow(base.num(), exponent), pow(base.den(), exponent));
}

int deg_map(const RatFunc& x) {
  if (x.is_zero()) {
    throw std::invalid_argument("deg_map of zero");
  }
  return std::max(x.num().degree(), x.den().degree());
}

std::optional<BigRat> eval_rf(const RatFunc& x, const BigRat& t0) {
  const BigRat d = x.den().eval(t0);
  if (d.is_zero()) {
    return std::nullopt;
  }
  return x.num().eval(t0) / d;
}

std::optional<RatFunc> is_square_rf(const RatFunc& x) {
  if (x.is_zero()) {
    return RatFunc{};
  }
  // x = c * pn / pd with pn, pd primitive of positive leading coefficient and c
  // rational; x is a square iff pn, pd are squares in Z[t] and c is in Q^2.
  const IntPoly pn = normalized_primitive(x.num());
  const IntPoly pd = normalized_primitive(x.den());
  const BigInt cn = content(x.num()) * BigInt(x.num().leading().sign());
  const BigInt cd = content(x.den());
  const auto rc = is_square_rat(BigRat(cn, cd));
  if (!rc) return std::nullopt;
  auto rn = poly_sqrt(pn);
  if (!rn) return std::nullopt;
  auto rd = poly_sqrt(pd);
  if (!rd) return std::nullopt;
  return RatFunc(*rc) * RatFunc(std::move(*rn), std::move(*rd));
}

std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

}  // namespace ellspec
