#include "ellspec/expression.hpp"

#include <cctype>

namespace ellspec {

XYPoly XYPoly::constant(const RatFunc& c) {
  XYPoly p;
  if (!c.is_zero()) p.terms.emplace(std::make_pair(0U, 0U), c);
  return p;
}

XYPoly XYPoly::monomial(unsigned dx, unsigned dy) {
  XYPoly p;
  p.terms.emplace(std::make_pair(dx, dy), RatFunc(1));
  return p;
}

RatFunc XYPoly::coeff(unsigned dx, unsigned dy) const {
  auto it = terms.find({dx, dy});
  return it == terms.end() ? RatFunc{} : it->second;
}

bool XYPoly::is_scalar() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first == std::make_pair(0U, 0U));
}

XYPoly XYPoly::operator-() const {
  XYPoly r = *this;
  for (auto& [k, c] : r.terms) c = -c;
  return r;
}

XYPoly operator+(const XYPoly& a, const XYPoly& b) {
  XYPoly r = a;
  for (const auto& [k, c] : b.terms) {
    RatFunc s = r.coeff(k.first, k.second) + c;
    if (s.is_zero()) {
      r.terms.erase(k);
    } else {
      r.terms[k] = std::move(s);
    }
  }
  return r;
}

XYPoly operator-(const XYPoly& a, const XYPoly& b) { return a + (-b); }

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
  XYPoly r;
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      r = r + [&] {
        XYPoly m;
        m.terms.emplace(std::make_pair(ka.first + kb.first, ka.second + kb.second), ca * cb);
        return m;
      }();
    }
  }
  return r;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view vars) : s_(text), vars_(vars) {}

  XYPoly parse() {
    XYPoly v = expr();
    skip_ws();
    if (pos_ != s_.size()) {
      fail(std::string("unexpected '") + s_[pos_] + "'");
    }
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  XYPoly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    XYPoly v = term();
    if (negate) v = -v;
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  XYPoly term() {
    XYPoly v = factor();
    for (;;) {
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        XYPoly d = factor();
        if (!d.is_scalar()) {
          throw ParseError("division by an expression in x or y", at);
        }
        if (d.is_zero()) {
          throw ParseError("division by zero", at);
        }
        const RatFunc inv = d.coeff(0, 0).inverse();
        v = v * XYPoly::constant(inv);
      } else {
        return v;
      }
    }
  }

  XYPoly factor() {
    XYPoly b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) {
        fail("expected exponent");
      }
      if (pos_ - start > 4) {
        throw ParseError("exponent too large", start);
      }
      const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      XYPoly r = XYPoly::constant(RatFunc(1));
      for (unsigned i = 0; i < e; ++i) r = r * b;
      return r;
    }
    return b;
  }

  XYPoly base() {
    skip_ws();
    if (pos_ >= s_.size()) {
      fail("unexpected end of input");
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return XYPoly::constant(RatFunc(BigInt::from_string(s_.substr(start, pos_ - start))));
    }
    if (c == '(') {
      ++pos_;
      XYPoly v = expr();
      if (!accept(')')) {
        fail("expected ')'");
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (vars_.find(c) == std::string_view::npos ||
          (pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        fail(std::string("unknown identifier starting with '") + c + "'");
      }
      ++pos_;
      switch (c) {
        case 't':
          return XYPoly::constant(RatFunc::var());
        case 'x':
          return XYPoly::monomial(1, 0);
        default:
          return XYPoly::monomial(0, 1);
      }
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

}  // namespace

XYPoly parse_expression(std::string_view text, std::string_view variables) {
  return Parser(text, variables).parse();
}

RatFunc parse_rat_func(std::string_view text) { return parse_expression(text, "t").coeff(0, 0); }

IntPoly parse_poly(std::string_view text) {
  const RatFunc v = parse_rat_func(text);
  auto p = v.as_int_poly();
  if (!p) {
    throw ParseError("expected a polynomial with integer coefficients, got " + v.to_string(), 0);
  }
  return *p;
}

}  // namespace ellspec
