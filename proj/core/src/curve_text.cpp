#include "ellspec/curve_text.hpp"

#include <cctype>
#include <vector>

namespace ellspec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Offsets reported by the expression parser are relative to the piece; shift
// them back into the caller's text.
template <class Fn>
auto at_offset(std::size_t base, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    std::string what = e.what();
    const auto cut = what.rfind(" at offset ");
    throw ParseError(what.substr(0, cut), base + e.offset());
  }
}

struct Piece {
  std::string_view text;
  std::size_t offset;
};

// Splits "(a, b, c)" at top-level commas; `open` is the index of '('.
std::vector<Piece> split_tuple(std::string_view s, std::size_t open) {
  int depth = 0;
  std::vector<Piece> out;
  std::size_t start = open + 1;
  for (std::size_t i = open; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth == 0) {
        out.push_back({s.substr(start, i - start), start});
        if (!trim(s.substr(i + 1)).empty()) throw ParseError("trailing input after ')'", i + 1);
        return out;
      }
    } else if (c == ',' && depth == 1) {
      out.push_back({s.substr(start, i - start), start});
      start = i + 1;
    }
  }
  throw ParseError("expected ')'", s.size());
}

RatFunc rf(const Piece& p) {
  return at_offset(p.offset, [&] { return parse_rat_func(p.text); });
}

CurveQt from_equation(std::string_view s) {
  const auto eq = s.find('=');
  const XYPoly lhs = at_offset(0, [&] { return parse_expression(s.substr(0, eq), "txy"); });
  const XYPoly rhs = at_offset(eq + 1, [&] { return parse_expression(s.substr(eq + 1), "txy"); });
  const XYPoly e = lhs - rhs;
  const RatFunc ly = e.coeff(0, 2);
  if (ly.is_zero()) throw ParseError("equation has no y^2 term", 0);
  for (const auto& [k, c] : e.terms) {
    const bool ok = k == std::make_pair(0U, 2U) || (k.second == 0 && k.first <= 3);
    if (!ok) throw ParseError("equation is not of the form y^2 = x^3 + Ax^2 + Bx + C", 0);
  }
  // e = ly * (y^2 - x^3 - A x^2 - B x - C)
  if (e.coeff(3, 0) != -ly) throw ParseError("equation is not of the form y^2 = x^3 + Ax^2 + Bx + C", 0);
  return CurveQt::from_coefficients(-e.coeff(2, 0) / ly, -e.coeff(1, 0) / ly, -e.coeff(0, 0) / ly);
}

}  // namespace

CurveQt parse_curve(std::string_view text) {
  const std::string_view s = text;
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty curve", 0);

  if (s.find('y') != std::string_view::npos) return from_equation(s);

  if (s[first] == 'e') {
    const auto open = s.find('(', first);
    const auto eq = s.find('=', first);
    if (eq == std::string_view::npos || open == std::string_view::npos || !trim(s.substr(first + 1, eq - first - 1)).empty() ||
        !trim(s.substr(eq + 1, open - eq - 1)).empty()) {
      throw ParseError("expected e=(e1, e2, e3)", first);
    }
    const auto parts = split_tuple(s, open);
    if (parts.size() != 3) throw ParseError("expected three roots", open);
    return CurveQt::from_roots(rf(parts[0]), rf(parts[1]), rf(parts[2]));
  }

  if (s[first] == '(') {
    const auto parts = split_tuple(s, first);
    if (parts.size() != 3) throw ParseError("expected (A, B, C)", first);
    return CurveQt::from_coefficients(rf(parts[0]), rf(parts[1]), rf(parts[2]));
  }

  // A=..., B=..., C=... in any order; missing coefficients are zero.
  RatFunc coef[3];
  bool seen[3] = {false, false, false};
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    const std::string_view item = s.substr(pos, comma - pos);
    const auto eq = item.find('=');
    const std::string_view name = trim(item.substr(0, eq == std::string_view::npos ? 0 : eq));
    if (eq == std::string_view::npos || name.size() != 1 || name[0] < 'A' || name[0] > 'C') {
      throw ParseError("expected A=..., B=..., C=...", pos);
    }
    const int k = name[0] - 'A';
    if (seen[k]) throw ParseError(std::string("duplicate coefficient ") + name[0], pos);
    seen[k] = true;
    coef[k] = rf({item.substr(eq + 1), pos + eq + 1});
    pos = comma + 1;
  }
  return CurveQt::from_coefficients(coef[0], coef[1], coef[2]);
}

PointQt parse_point(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "O") return PointQt();
  const auto open = text.find('(');
  if (open == std::string_view::npos || !trim(text.substr(0, open)).empty()) {
    throw ParseError("expected O or (x, y)", 0);
  }
  const auto parts = split_tuple(text, open);
  if (parts.size() != 2) throw ParseError("expected (x, y)", open);
  return PointQt(rf(parts[0]), rf(parts[1]));
}

BigRat parse_rational(std::string_view text) {
  const RatFunc v = parse_rat_func(text);
  auto c = v.constant_value();
  if (!c) throw ParseError("expected a rational number", 0);
  return *c;
}

}  // namespace ellspec
