#pragma once

// Sufficient conditions for injectivity of the specialization map at t0.
//
//   A       split curve: no divisor of any (e_j - e_i)(e_k - e_i) is a square at t0
//   Aprime  split curve: no divisor of (e1 - e2)(e2 - e3)(e3 - e1) is a square at t0
//   scriptA one rational 2-torsion point, model y^2 = x^3 + Ax^2 + Bx: no
//           divisor of B or of A^2 - 4B is a square at t0
//   A1B     diagnostic only: no divisor of D is a square at t0, and the
//           specialized cubic is irreducible. This does NOT certify injectivity.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellspec/curve.hpp"
#include "ellspec/divisors.hpp"

namespace ellspec {

enum class Condition { A, APrime, ScriptA, A1B };

/// "A", "Aprime", "scriptA", "A1B".
std::string condition_name(Condition c);
std::optional<Condition> parse_condition(std::string_view name);

/// One evaluated divisor.
struct DivisorCheck {
  std::string target;  // label such as "B" or "(e2-e1)(e3-e1)"
  IntPoly divisor;
  BigRat value;
  bool square = false;

  friend bool operator==(const DivisorCheck&, const DivisorCheck&) = default;
};

struct ConditionReport {
  Condition condition = Condition::A;
  /// Text of the curve as given.
  std::string input;
  /// Text of the model the condition was evaluated on (after any shift).
  std::string model;
  BigRat t0;
  /// Discriminant of the cubic at t0.
  BigRat discriminant_at_t0;
  bool passed = false;
  /// False for A1B, which is never an injectivity certificate.
  bool certifying = true;
  std::vector<DivisorCheck> checks;
  /// scriptA: verdict when constant square-free divisors are also required to
  /// be non-squares ("each factor h" reading).
  std::optional<bool> constant_reading_passed;
  /// A1B: the divisor part and the irreducibility part separately.
  std::optional<bool> a1_passed;
  std::optional<bool> b_passed;
  std::vector<std::string> notes;

  /// First divisor whose value is a square, if any.
  std::optional<DivisorCheck> witness() const;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

/// Text of a curve that parse_curve reads back: e-list for split curves.
std::string describe_curve(const CurveQt& curve);

/// Precomputes the divisor sets of one curve for one condition.
///
/// Requirements (std::domain_error otherwise): A and Aprime need a split curve
/// with roots in Z[t]; scriptA needs coefficients in Z[t] and exactly one
/// rational 2-torsion point (the model is shifted to put it at (0, 0)); A1B
/// needs coefficients in Z[t].
class InjectivityChecker {
 public:
  InjectivityChecker(const CurveQt& curve, Condition condition);

  Condition condition() const { return condition_; }
  /// The model the checks run on (shifted for scriptA).
  const CurveQt& model() const { return model_; }
  const std::vector<std::pair<std::string, DivisorSet>>& divisor_sets() const { return sets_; }

  ConditionReport evaluate(const BigRat& t0) const;

 private:
  Condition condition_;
  std::string input_;
  CurveQt model_;
  std::vector<std::pair<std::string, DivisorSet>> sets_;
  std::vector<std::pair<std::string, std::vector<BigInt>>> constant_sets_;
  std::vector<std::string> notes_;
};

ConditionReport condition_A(const CurveQt& curve, const BigRat& t0);
ConditionReport condition_A_prime(const CurveQt& curve, const BigRat& t0);
ConditionReport condition_script_A(const CurveQt& curve, const BigRat& t0);
ConditionReport condition_A1_and_B(const CurveQt& curve, const BigRat& t0);
ConditionReport check_condition(const CurveQt& curve, Condition condition, const BigRat& t0);

/// D(t0) != 0, and the number of distinct rational roots of the specialized cubic is one.
struct TorsionShape {
  bool nonsingular = false;
  bool exactly_one_rational_root = false;
};
TorsionShape torsion_shape_checks(const CurveQt& curve, const BigRat& t0);

/// Candidates 0, 1, -1, 2, -2, ..., +-max_integer, then the non-integral
/// rationals a/b by height max(|a|, b) = 2 .. max_height; within a height by
/// b ascending, then |a| ascending, positive first.
struct SearchBudget {
  long max_integer = 10000;
  long max_height = 100;
};

class T0Sequence {
 public:
  explicit T0Sequence(SearchBudget budget) : budget_(budget) {}
  std::optional<BigRat> next();

 private:
  SearchBudget budget_;
  long k_ = 0;          // integer phase counter
  long height_ = 2;     // rational phase
  long den_ = 2;
  long num_ = 1;
  int sign_ = 1;
  bool integers_done_ = false;
};

struct SearchResult {
  std::optional<ConditionReport> report;  // first passing t0
  std::size_t candidates = 0;
};

SearchResult find_t0(const CurveQt& curve, Condition condition, SearchBudget budget = {});

}  // namespace ellspec
