#include "ellspec/injectivity.hpp"

#include <numeric>
#include <stdexcept>

#include "ellspec/poly_factor.hpp"

namespace ellspec {

namespace {

IntPoly integral(const RatFunc& f, const char* what) {
  auto p = f.as_int_poly();
  if (!p) throw std::domain_error(std::string(what) + " = " + f.to_string() + " is not in Z[t]");
  return *p;
}

void require_integral(const CurveQt& curve) {
  integral(curve.A(), "A");
  integral(curve.B(), "B");
  integral(curve.C(), "C");
}

const std::array<RatFunc, 3>& integral_roots(const CurveQt& curve) {
  if (!curve.split_roots()) {
    throw std::domain_error("condition needs a split curve, got " + curve.to_string());
  }
  for (const RatFunc& e : *curve.split_roots()) integral(e, "root");
  return *curve.split_roots();
}

CurveQt prepare_model(const CurveQt& curve, Condition condition) {
  switch (condition) {
    case Condition::A:
    case Condition::APrime:
      integral_roots(curve);
      return curve;
    case Condition::A1B:
      require_integral(curve);
      return curve;
    case Condition::ScriptA: {
      require_integral(curve);
      const auto torsion = curve.two_torsion();
      if (torsion.size() != 2) {
        throw std::domain_error("condition scriptA needs exactly one rational 2-torsion point; " + curve.to_string() +
                                " has " + std::to_string(torsion.size() - 1));
      }
      const RatFunc& e = torsion[1].x();
      // Drop any recorded root order: the shifted model is not split.
      const CurveQt shifted = e.is_zero() ? curve : shift_x(curve, e);
      return CurveQt::from_coefficients(shifted.A(), shifted.B(), shifted.C());
    }
  }
  throw std::logic_error("unknown condition");
}

BigRat cubic_at(const CurveQt& curve, const BigRat& t0, const RatFunc& f) {
  auto v = eval_rf(f, t0);
  if (!v) throw std::domain_error("coefficient " + f.to_string() + " has a pole at " + t0.to_string());
  (void)curve;
  return *v;
}

std::vector<BigRat> specialized_roots(const CurveQt& curve, const BigRat& t0) {
  return cubic_roots(cubic_at(curve, t0, curve.A()), cubic_at(curve, t0, curve.B()), cubic_at(curve, t0, curve.C()));
}

}  // namespace

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::A:
      return "A";
    case Condition::APrime:
      return "Aprime";
    case Condition::ScriptA:
      return "scriptA";
    case Condition::A1B:
      return "A1B";
  }
  return "?";
}

std::optional<Condition> parse_condition(std::string_view name) {
  for (Condition c : {Condition::A, Condition::APrime, Condition::ScriptA, Condition::A1B}) {
    if (condition_name(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<DivisorCheck> ConditionReport::witness() const {
  for (const DivisorCheck& c : checks) {
    if (c.square) return c;
  }
  return std::nullopt;
}

std::string describe_curve(const CurveQt& curve) {
  if (curve.split_roots()) {
    const auto& e = *curve.split_roots();
    return "e=(" + e[0].to_string() + ", " + e[1].to_string() + ", " + e[2].to_string() + ")";
  }
  return curve.to_string();
}

InjectivityChecker::InjectivityChecker(const CurveQt& curve, Condition condition)
    : condition_(condition), input_(describe_curve(curve)), model_(prepare_model(curve, condition)) {
  auto add = [this](std::string label, const IntPoly& target) {
    sets_.emplace_back(label, enumerate_divisors(target));
    if (condition_ == Condition::ScriptA) constant_sets_.emplace_back(std::move(label), constant_divisors(target));
  };
  switch (condition) {
    case Condition::A: {
      const auto& e = integral_roots(model_);
      const char* labels[3] = {"(e2-e1)(e3-e1)", "(e3-e2)(e1-e2)", "(e1-e3)(e2-e3)"};
      for (int i = 0; i < 3; ++i) {
        const RatFunc& ei = e[static_cast<std::size_t>(i)];
        const RatFunc v = (e[static_cast<std::size_t>((i + 1) % 3)] - ei) * (e[static_cast<std::size_t>((i + 2) % 3)] - ei);
        add(labels[i], integral(v, "root difference product"));
      }
      break;
    }
    case Condition::APrime: {
      const auto& e = integral_roots(model_);
      add("(e1-e2)(e2-e3)(e3-e1)", integral((e[0] - e[1]) * (e[1] - e[2]) * (e[2] - e[0]), "root difference product"));
      break;
    }
    case Condition::ScriptA: {
      const IntPoly a = integral(model_.A(), "A");
      const IntPoly b = integral(model_.B(), "B");
      const IntPoly d = a * a - BigInt(4) * b;
      if (poly_sqrt(d)) {
        throw std::domain_error("A^2 - 4B = " + d.to_string() + " is a square in Z[t]; the curve is split");
      }
      add("B", b);
      add("A^2-4B", d);
      if (model_ != curve) notes_.push_back("model shifted from " + curve.to_string());
      break;
    }
    case Condition::A1B:
      add("D", integral(model_.discriminant(), "D"));
      break;
  }
}

ConditionReport InjectivityChecker::evaluate(const BigRat& t0) const {
  ConditionReport r;
  r.condition = condition_;
  r.input = input_;
  r.model = describe_curve(model_);
  r.t0 = t0;
  r.certifying = condition_ != Condition::A1B;
  r.notes = notes_;
  r.discriminant_at_t0 = *eval_rf(model_.discriminant(), t0);
  if (r.discriminant_at_t0.is_zero()) {
    r.passed = false;
    r.notes.push_back("discriminant vanishes at t0");
    if (condition_ == Condition::A1B) {
      r.a1_passed = false;
      r.b_passed = false;
    }
    if (condition_ == Condition::ScriptA) r.constant_reading_passed = false;
    return r;
  }
  bool all_clear = true;
  for (const auto& [label, set] : sets_) {
    for (const IntPoly& h : set.divisors) {
      DivisorCheck c{label, h, h.eval(t0), false};
      c.square = is_square_rat(c.value).has_value();
      all_clear = all_clear && !c.square;
      r.checks.push_back(std::move(c));
    }
  }
  r.passed = all_clear;
  if (condition_ == Condition::ScriptA) {
    bool constants_clear = true;
    for (const auto& [label, cs] : constant_sets_) {
      for (const BigInt& c : cs) constants_clear = constants_clear && !is_square_rat(BigRat(c)).has_value();
    }
    r.constant_reading_passed = all_clear && constants_clear;
    if (*r.constant_reading_passed != r.passed) {
      r.notes.push_back("verdict differs when constant divisors are included");
    }
  }
  if (condition_ == Condition::A1B) {
    r.a1_passed = all_clear;
    r.b_passed = specialized_roots(model_, t0).empty();
    r.passed = *r.a1_passed && *r.b_passed;
    r.notes.push_back("NOT an injectivity certificate");
  }
  return r;
}

ConditionReport check_condition(const CurveQt& curve, Condition condition, const BigRat& t0) {
  return InjectivityChecker(curve, condition).evaluate(t0);
}

ConditionReport condition_A(const CurveQt& curve, const BigRat& t0) { return check_condition(curve, Condition::A, t0); }
ConditionReport condition_A_prime(const CurveQt& curve, const BigRat& t0) {
  return check_condition(curve, Condition::APrime, t0);
}
ConditionReport condition_script_A(const CurveQt& curve, const BigRat& t0) {
  return check_condition(curve, Condition::ScriptA, t0);
}
ConditionReport condition_A1_and_B(const CurveQt& curve, const BigRat& t0) {
  return check_condition(curve, Condition::A1B, t0);
}

TorsionShape torsion_shape_checks(const CurveQt& curve, const BigRat& t0) {
  TorsionShape out;
  auto d = eval_rf(curve.discriminant(), t0);
  out.nonsingular = d && !d->is_zero();
  out.exactly_one_rational_root = specialized_roots(curve, t0).size() == 1;
  return out;
}

std::optional<BigRat> T0Sequence::next() {
  if (!integers_done_) {
    const long v = k_ == 0 ? 0 : (k_ % 2 == 1 ? (k_ + 1) / 2 : -(k_ / 2));
    if ((v < 0 ? -v : v) <= budget_.max_integer) {
      ++k_;
      return BigRat(v);
    }
    integers_done_ = true;
  }
  for (; height_ <= budget_.max_height; ++height_, den_ = 2, num_ = 1, sign_ = 1) {
    for (; den_ <= height_; ++den_, num_ = 1, sign_ = 1) {
      // Below the height, only |num| = height fits; at den = height, |num| < height.
      if (den_ < height_ && num_ < height_) num_ = height_;
      const long top = den_ < height_ ? height_ : height_ - 1;
      for (; num_ <= top; ++num_, sign_ = 1) {
        if (std::gcd(num_, den_) != 1) continue;
        if (sign_ == 1) {
          sign_ = -1;
          return BigRat(BigInt(num_), BigInt(den_));
        }
        if (sign_ == -1) {
          sign_ = 0;
          return BigRat(BigInt(-num_), BigInt(den_));
        }
      }
    }
  }
  return std::nullopt;
}

SearchResult find_t0(const CurveQt& curve, Condition condition, SearchBudget budget) {
  const InjectivityChecker checker(curve, condition);
  T0Sequence seq(budget);
  SearchResult out;
  while (auto t0 = seq.next()) {
    ++out.candidates;
    ConditionReport r = checker.evaluate(*t0);
    if (r.passed) {
      out.report = std::move(r);
      return out;
    }
  }
  return out;
}

}  // namespace ellspec
