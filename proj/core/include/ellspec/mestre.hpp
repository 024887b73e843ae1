#pragma once

// Quadratic twists E_g : y^2 = x^3 + a g^2 x + b g^3 of E : y^2 = x^3 + a x + b by
//
//   g = -ab (t^2 + 1) (b^2 (t^4 + t^2 + 1)^3 + a^3 t^4 (t^2 + 1)^2),
//
// with the two points
//
//   P = (-(b/a) (t^2+t+1)(t^2-t+1) / (t^2+1) * g,      g^2 / (a^2 (t^2+1)^2))
//   Q = (-(b/a) (t^2+t+1)(t^2-t+1) / (t^2 (t^2+1)) * g, g^2 / (a^2 t^3 (t^2+1)^2)).
//
// deg phi_T = deg_map(x(T) / g) is twice the canonical height of T.

#include <optional>
#include <string>
#include <vector>

#include "ellspec/curve.hpp"
#include "ellspec/injectivity.hpp"

namespace ellspec {

struct MestreInstance {
  BigRat a;
  BigRat b;
  RatFunc g;
  /// g scaled by a positive rational to a primitive polynomial of Z[t].
  IntPoly g_integral;
  CurveQt curve;
  /// Model with Z[t] coefficients, (x, y) -> (u^2 x, u^3 y) from `curve`.
  IntegralModel integral;
  PointQt P;
  PointQt Q;
};

/// Throws std::invalid_argument when ab = 0 and std::logic_error if P or Q
/// fails the curve equation.
MestreInstance build_mestre(const BigRat& a, const BigRat& b);

/// deg_map(x(T) / g); 0 for O and for points with x(T) / g constant.
int morphism_degree(const MestreInstance& m, const PointQt& t);

/// (deg phi_{T+S} - deg phi_T - deg phi_S) / 2.
BigRat pairing(const MestreInstance& m, const PointQt& t, const PointQt& s);

/// True when a twist by g admits no point T with deg phi_T in {1, 2}: a
/// solution would make w * beta * g a square with deg(w * beta) <= 8, which is
/// impossible for square-free g of degree > 8.
bool small_degree_exclusion(const IntPoly& g);
bool small_degree_exclusion(const MestreInstance& m);

/// How injectivity of the specialization at t0 is established.
struct InjectivityEvidence {
  /// A passing certifying report computed here (needs a rational root of x^3 + ax + b).
  std::optional<ConditionReport> certificate;
  /// Externally declared injectivity (e.g. a computation over the splitting field).
  std::optional<std::string> declared_source;
  /// Non-certifying A1B report, attached when no certificate can be computed.
  std::optional<ConditionReport> diagnostic;
};

/// Evaluates the injectivity condition available over Q at t0 on the integral
/// model: scriptA when x^3 + ax + b has one rational root, A when it has three,
/// and the non-certifying A1B report otherwise. `notes` receives one line
/// describing the outcome. Throws std::domain_error when E_g is singular at t0.
InjectivityEvidence injectivity_evidence(const MestreInstance& m, const BigRat& t0, std::vector<std::string>& notes);

struct MestreConclusion {
  BigRat a;
  BigRat b;
  BigRat t0;
  int deg_p = 0;
  int deg_q = 0;
  int deg_p_plus_q = 0;
  int deg_p_minus_q = 0;
  BigRat pairing_pq;
  bool exclusion_holds = false;
  InjectivityEvidence injectivity;
  long specialized_rank = 0;
  std::string rank_source;
  /// rank 2 with free generators P, Q; otherwise the two inequalities.
  bool rank_two_proved = false;
  std::vector<std::string> conclusions;
  std::vector<std::string> notes;
};

/// Assembles the generator statement at t0.
///
/// When x^3 + ax + b has rational roots the injectivity condition (scriptA for
/// one root, A for three) is evaluated on the integral model; a passing report
/// is the evidence. Otherwise, or when it fails, `declared_injectivity` must
/// name an external source. Throws std::invalid_argument when no evidence is
/// available or the specialized rank is below 2 (contradicting injectivity),
/// and std::domain_error when E_g is singular at t0.
MestreConclusion generator_certificate(const MestreInstance& m, const BigRat& t0, long specialized_rank,
                                       const std::string& rank_source,
                                       const std::optional<std::string>& declared_injectivity = std::nullopt);

/// Pretty-printed JSON including the full condition reports.
std::string conclusion_to_json(const MestreConclusion& c);

}  // namespace ellspec
