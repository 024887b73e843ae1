#include "ellspec/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ellspec {

BigRat::BigRat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("rational with zero denominator");
  }
  normalize();
}

void BigRat::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const BigInt g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
}

BigRat BigRat::from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRat(BigInt::from_string(text));
  }
  const auto den = BigInt::from_string(text.substr(slash + 1));
  if (den.sign() <= 0) {
    throw std::invalid_argument("rational literal needs a positive denominator: '" +
                                std::string(text) + "'");
  }
  return BigRat(BigInt::from_string(text.substr(0, slash)), den);
}

std::string BigRat::to_string() const {
  if (is_integer()) {
    return num_.to_string();
  }
  return num_.to_string() + "/" + den_.to_string();
}

BigInt BigRat::height() const {
  BigInt a = abs(num_);
  return a > den_ ? a : den_;
}

BigRat BigRat::operator-() const {
  BigRat r = *this;
  r.num_ = -r.num_;
  return r;
}

BigRat& BigRat::operator+=(const BigRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& o) { return *this += -o; }

BigRat& BigRat::operator*=(const BigRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) {
    throw std::domain_error("rational division by zero");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

BigRat BigRat::inverse() const { return BigRat(1) / *this; }

BigRat pow(const BigRat& base, unsigned long exponent) {
  return BigRat(pow(base.num(), exponent), pow(base.den(), exponent));
}

std::optional<BigRat> is_square_rat(const BigRat& q) {
  if (q.sign() < 0) {
    return std::nullopt;
  }
  auto n = exact_sqrt(q.num());
  if (!n) {
    return std::nullopt;
  }
  auto d = exact_sqrt(q.den());
  if (!d) {
    return std::nullopt;
  }
  return BigRat(*n, *d);
}

std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.to_string(); }

}  // namespace ellspec
