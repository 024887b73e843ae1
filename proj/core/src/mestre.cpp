#include "ellspec/mestre.hpp"

#include <stdexcept>

#include "ellspec/certificate.hpp"
#include "ellspec/expression.hpp"
#include "ellspec/poly_factor.hpp"
#include "ellspec/specialize.hpp"
#include "json.hpp"

namespace ellspec {

namespace {

RatFunc rf(const char* text) { return RatFunc(parse_poly(text)); }

}  // namespace

MestreInstance build_mestre(const BigRat& a, const BigRat& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("Mestre family needs ab != 0");
  const RatFunc ra(a), rb(b);
  const RatFunc t2p1 = rf("t^2 + 1");
  const RatFunc g = -(ra * rb) * t2p1 *
                    (rb * rb * pow(rf("t^4 + t^2 + 1"), 3) + ra * ra * ra * pow(RatFunc::var(), 4) * t2p1 * t2p1);
  const RatFunc c = -(rb / ra) * rf("(t^2 + t + 1)*(t^2 - t + 1)") * g / t2p1;
  const RatFunc yy = g * g / (ra * ra * t2p1 * t2p1);
  const RatFunc t = RatFunc::var();

  CurveQt e = CurveQt::from_coefficients(RatFunc(0), ra * g * g, rb * g * g * g);
  PointQt p(c, yy);
  PointQt q(c / (t * t), yy / (t * t * t));
  if (!e.contains(p) || !e.contains(q)) throw std::logic_error("Mestre points fail the curve equation");

  IntegralModel im = integral_model(e);
  const IntPoly gi = normalized_primitive(g.num());
  return MestreInstance{a, b, g, gi, std::move(e), std::move(im), std::move(p), std::move(q)};
}

int morphism_degree(const MestreInstance& m, const PointQt& t) {
  m.curve.require_on_curve(t);
  if (t.is_infinity()) return 0;
  const RatFunc r = t.x() / m.g;
  return r.is_zero() ? 0 : deg_map(r);
}

BigRat pairing(const MestreInstance& m, const PointQt& t, const PointQt& s) {
  const int d = morphism_degree(m, m.curve.add(t, s)) - morphism_degree(m, t) - morphism_degree(m, s);
  return BigRat(BigInt(d), BigInt(2));
}

bool small_degree_exclusion(const IntPoly& g) { return g.degree() > 8 && is_squarefree(g); }

bool small_degree_exclusion(const MestreInstance& m) { return small_degree_exclusion(m.g_integral); }

InjectivityEvidence injectivity_evidence(const MestreInstance& m, const BigRat& t0, std::vector<std::string>& notes) {
  specialize_curve(m.curve, t0);  // domain_error when singular at t0
  InjectivityEvidence ev;
  // Rational roots of x^3 + ax + b over a common denominator.
  const BigInt den = lcm(m.a.den(), m.b.den());
  const IntPoly f(std::vector<BigInt>{(m.b * BigRat(den)).num(), (m.a * BigRat(den)).num(), BigInt(0), den});
  const std::size_t roots = rational_roots(f).size();
  const CurveQt& model = m.integral.curve;
  if (roots == 1 || roots == 3) {
    const Condition cond = roots == 1 ? Condition::ScriptA : Condition::A;
    ConditionReport r = check_condition(model, cond, t0);
    notes.push_back("condition " + condition_name(cond) + (r.passed ? " holds" : " fails") + " at t0 = " +
                    t0.to_string());
    if (r.passed) {
      ev.certificate = std::move(r);
    } else {
      ev.diagnostic = std::move(r);
    }
  } else {
    ev.diagnostic = condition_A1_and_B(model, t0);
    notes.push_back("x^3 + ax + b has no rational root: no 2-torsion over Q(t), no certificate computed here");
  }
  return ev;
}

MestreConclusion generator_certificate(const MestreInstance& m, const BigRat& t0, long specialized_rank,
                                       const std::string& rank_source,
                                       const std::optional<std::string>& declared_injectivity) {
  MestreConclusion c;
  c.a = m.a;
  c.b = m.b;
  c.t0 = t0;
  c.deg_p = morphism_degree(m, m.P);
  c.deg_q = morphism_degree(m, m.Q);
  c.deg_p_plus_q = morphism_degree(m, m.curve.add(m.P, m.Q));
  c.deg_p_minus_q = morphism_degree(m, m.curve.sub(m.P, m.Q));
  c.pairing_pq = pairing(m, m.P, m.Q);
  c.exclusion_holds = small_degree_exclusion(m);
  c.specialized_rank = specialized_rank;
  c.rank_source = rank_source;

  c.injectivity = injectivity_evidence(m, t0, c.notes);
  if (!c.injectivity.certificate) {
    if (!declared_injectivity || declared_injectivity->empty()) {
      throw std::invalid_argument("no injectivity certificate at t0 = " + t0.to_string() +
                                  " and no declared source");
    }
    c.injectivity.declared_source = *declared_injectivity;
  }
  if (specialized_rank < 2) {
    throw std::invalid_argument("specialized rank " + std::to_string(specialized_rank) +
                                " is below 2, impossible for an injective specialization");
  }

  const bool shape = c.deg_p == 4 && c.deg_q == 4 && c.pairing_pq.is_zero() && c.exclusion_holds;
  if (!shape) c.notes.push_back("degree data differ from deg phi_P = deg phi_Q = 4, <P,Q> = 0");
  c.conclusions.push_back("rank(E_g/Q(t)) >= 2");
  if (specialized_rank == 2 && shape) {
    c.rank_two_proved = true;
    c.conclusions.push_back("rank(E_g/Q(t)) = 2 with free generators P, Q");
  } else {
    c.conclusions.push_back("rank(E_g/Q(t)) <= " + std::to_string(specialized_rank));
  }
  return c;
}

std::string conclusion_to_json(const MestreConclusion& c) {
  using nlohmann::json;
  json inj = json::object();
  if (c.injectivity.certificate) inj["certificate"] = json::parse(report_to_json(*c.injectivity.certificate));
  if (c.injectivity.declared_source) inj["declared_source"] = *c.injectivity.declared_source;
  if (c.injectivity.diagnostic) inj["diagnostic"] = json::parse(report_to_json(*c.injectivity.diagnostic));
  const json j = {{"a", c.a.to_string()},
                  {"b", c.b.to_string()},
                  {"t0", c.t0.to_string()},
                  {"deg_phi_P", c.deg_p},
                  {"deg_phi_Q", c.deg_q},
                  {"deg_phi_P_plus_Q", c.deg_p_plus_q},
                  {"deg_phi_P_minus_Q", c.deg_p_minus_q},
                  {"pairing_PQ", c.pairing_pq.to_string()},
                  {"small_degree_exclusion", c.exclusion_holds},
                  {"injectivity", inj},
                  {"specialized_rank", {{"value", c.specialized_rank}, {"source", c.rank_source}}},
                  {"rank_two_proved", c.rank_two_proved},
                  {"conclusions", c.conclusions},
                  {"notes", c.notes}};
  return j.dump(2) + "\n";
}

}  // namespace ellspec
