#include "golden.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "ellspec/curve_text.hpp"
#include "ellspec/descent.hpp"
#include "ellspec/injectivity.hpp"
#include "ellspec/mestre.hpp"
#include "ellspec/poly_factor.hpp"
#include "ellspec/specialize.hpp"

namespace ellspec::cli {

namespace {

BigRat Q(const char* s) { return BigRat::from_string(s); }

const char* kSplit = "e=(0, t, 7*t + 1)";
const char* kOneTorsion = "y^2 = x^3 + t^2*x^2 - x";
const char* kBremner =
    "y^2 = x*(x^2 - 2*(5*(2*t^2 - 2*t + 1)*(t^2 - 2*t + 2) - 2*(t^2 - 1)^2)*x + "
    "25*(2*t^2 - 2*t + 1)^2*(t^2 - 2*t + 2)^2)";
const char* kTrivialTorsion = "y^2 = x^3 - x + t^2";

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

std::vector<std::pair<std::string, Check>> rows() {
  std::vector<std::pair<std::string, Check>> r;
  r.emplace_back("split curve e=(0,t,7t+1) has A=-(8t+1), B=t(7t+1), C=0", [] {
    const CurveQt e = parse_curve(kSplit);
    return expect(e == parse_curve("(-(8*t + 1), t*(7*t + 1), 0)"), e.to_string());
  });
  r.emplace_back("(A) passes at t0=1/21 on e=(0,t,7t+1)", [] {
    return expect(condition_A(parse_curve(kSplit), Q("1/21")).passed, "condition A failed");
  });
  r.emplace_back("(A') fails at t0=1/21 with witness t(6t+1)(7t+1) = 4/49", [] {
    const auto w = condition_A_prime(parse_curve(kSplit), Q("1/21")).witness();
    return expect(w && w->value == Q("4/49") && w->divisor == parse_poly("t*(6*t + 1)*(7*t + 1)"),
                  w ? w->divisor.to_string() + " -> " + w->value.to_string() : "no witness");
  });
  r.emplace_back("parse y^2 = x^3 + t^2*x^2 - x gives (t^2, -1, 0)", [] {
    return expect(parse_curve(kOneTorsion) == parse_curve("(t^2, -1, 0)"), "mismatch");
  });
  r.emplace_back("y^2 = x^3 + t^2*x^2 - x has D = B^2(A^2 - 4B) = t^4 + 4", [] {
    return expect(parse_curve(kOneTorsion).discriminant() == parse_rat_func("t^4 + 4"),
                  parse_curve(kOneTorsion).discriminant().to_string());
  });
  r.emplace_back("y^2 = x^3 + t^2*x^2 - x has 2-torsion {O, (0,0)}", [] {
    const auto t = parse_curve(kOneTorsion).two_torsion();
    return expect(t.size() == 2 && t[1] == PointQt(RatFunc(0), RatFunc(0)), "unexpected torsion");
  });
  r.emplace_back("dual of y^2 = x^3 + t^2*x^2 - x is y^2 = x^3 - 2t^2x^2 + (t^4+4)x", [] {
    return expect(dual_curve(parse_curve(kOneTorsion)) == parse_curve("(-2*t^2, t^4 + 4, 0)"), "mismatch");
  });
  r.emplace_back("scriptA fails at t0 = 0, 1, -1 (witnesses t^4+4 -> 4, t^2-2t+2 -> 1)", [] {
    const CurveQt e = parse_curve(kOneTorsion);
    for (const char* t0 : {"0", "1", "-1"}) {
      if (condition_script_A(e, Q(t0)).passed) return std::string("passed at ") + t0;
    }
    const auto w0 = condition_script_A(e, BigRat(0)).witness();
    const auto w1 = condition_script_A(e, BigRat(1)).witness();
    return expect(w0 && w0->divisor == parse_poly("t^4 + 4") && w0->value == BigRat(4) && w1 &&
                      w1->divisor == parse_poly("t^2 - 2*t + 2") && w1->value == BigRat(1),
                  "witness mismatch");
  });
  r.emplace_back("find-t0 with scriptA on y^2 = x^3 + t^2*x^2 - x returns 2", [] {
    const auto s = find_t0(parse_curve(kOneTorsion), Condition::ScriptA);
    return expect(s.report && s.report->t0 == BigRat(2), "wrong t0");
  });
  r.emplace_back("P=(1,t): 2P != O but its specialization at 0 is O", [] {
    const CurveQt e = parse_curve(kOneTorsion);
    const PointQt p2 = e.scalar_mul(2, PointQt(RatFunc(1), RatFunc::var()));
    return expect(!p2.is_infinity() && specialize_point(e, p2, BigRat(0)).is_infinity(), "kernel not found");
  });
  r.emplace_back("specialization at 2: y^2 = x^3 + 4x^2 - x and P -> (1, 2)", [] {
    const CurveQt e = parse_curve(kOneTorsion);
    return expect(specialize_curve(e, BigRat(2)) == CurveQ::from_coefficients(BigRat(4), BigRat(-1), BigRat(0)) &&
                      specialize_point(e, PointQt(RatFunc(1), RatFunc::var()), BigRat(2)) ==
                          PointQ(BigRat(1), BigRat(2)),
                  "mismatch");
  });
  r.emplace_back("Bremner curve discriminant = -2^8 5^4 (t-1)^2 (t+1)^2 (9t^4-...)(t^2-2t+2)^4 (2t^2-2t+1)^4", [] {
    return expect(parse_curve(kBremner).weierstrass_discriminant() ==
                      parse_rat_func("-2^8*5^4*(t-1)^2*(t+1)^2*(9*t^4-30*t^3+47*t^2-30*t+9)*(t^2-2*t+2)^4*"
                                     "(2*t^2-2*t+1)^4"),
                  "mismatch");
  });
  r.emplace_back("9t^4 - 30t^3 + 47t^2 - 30t + 9 is irreducible", [] {
    const Factorization f = factor(parse_poly("9*t^4 - 30*t^3 + 47*t^2 - 30*t + 9"));
    return expect(f.poly_factors.size() == 1 && f.poly_factors[0].second == 1, "reducible");
  });
  r.emplace_back("scriptA passes at t0 = 5/2 on the Bremner curve", [] {
    return expect(condition_script_A(parse_curve(kBremner), Q("5/2")).passed, "failed");
  });
  r.emplace_back("y^2 = x^3 - x + t^2 has trivial 2-torsion", [] {
    return expect(parse_curve(kTrivialTorsion).two_torsion().size() == 1, "nontrivial torsion");
  });
  r.emplace_back("A1B (non-certifying) passes at t0 = 1, -1, 1/2, -1/2 on y^2 = x^3 - x + t^2", [] {
    const CurveQt e = parse_curve(kTrivialTorsion);
    for (const char* t0 : {"1", "-1", "1/2", "-1/2"}) {
      const auto rep = condition_A1_and_B(e, Q(t0));
      if (!rep.passed || rep.certifying) return std::string("unexpected at ") + t0;
    }
    return std::string();
  });
  r.emplace_back("specialization of y^2 = x^3 - x + t^2 at 1 is not injective on (0,t), (1,t)", [] {
    const CurveQt e = parse_curve(kTrivialTorsion);
    const PointQt p(RatFunc(0), RatFunc::var()), q(RatFunc(1), RatFunc::var());
    const auto rel = relation_search(specialize_curve(e, BigRat(1)),
                                     {specialize_point(e, p, BigRat(1)), specialize_point(e, q, BigRat(1))}, 20);
    if (!rel) return std::string("no relation with |m| <= 20");
    return expect(!e.add(e.scalar_mul((*rel)[0], p), e.scalar_mul((*rel)[1], q)).is_infinity(),
                  "relation holds over Q(t)");
  });
  r.emplace_back("A1 part passes at t0 = 0 on y^2 = x^3 - t^2*x + 1", [] {
    const auto rep = condition_A1_and_B(parse_curve("y^2 = x^3 - t^2*x + 1"), BigRat(0));
    return expect(rep.a1_passed.value_or(false), "A1 failed");
  });
  r.emplace_back("g^{2,12} = -2^6 * 3 * (t^2+1)(3t^4+2t^2+2)(3t^4+4t^2+3)(2t^4+2t^2+3)", [] {
    const MestreInstance m = build_mestre(BigRat(2), BigRat(12));
    const Factorization f = factor(*m.g.as_int_poly());
    std::vector<IntPoly> polys;
    for (const auto& [p, e] : f.poly_factors) {
      if (e != 1) return std::string("repeated factor");
      polys.push_back(p);
    }
    std::vector<IntPoly> want{parse_poly("t^2 + 1"), parse_poly("2*t^4 + 2*t^2 + 3"), parse_poly("3*t^4 + 2*t^2 + 2"),
                              parse_poly("3*t^4 + 4*t^2 + 3")};
    std::sort(polys.begin(), polys.end());
    std::sort(want.begin(), want.end());
    return expect(f.unit == -1 && f.content() == BigInt(192) && polys == want, "factorization mismatch");
  });
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 12}}) {
    const std::string tag = "(a,b) = (" + std::to_string(a) + "," + std::to_string(b) + ")";
    r.emplace_back(tag + ": P, Q on E_g; deg phi_P = deg phi_Q = 4; deg phi_{P+-Q} = 8; <P,Q> = 0", [a, b] {
      const MestreInstance m = build_mestre(BigRat(a), BigRat(b));
      const bool ok = m.curve.contains(m.P) && m.curve.contains(m.Q) && morphism_degree(m, m.P) == 4 &&
                      morphism_degree(m, m.Q) == 4 && morphism_degree(m, m.curve.add(m.P, m.Q)) == 8 &&
                      morphism_degree(m, m.curve.sub(m.P, m.Q)) == 8 && pairing(m, m.P, m.Q).is_zero() &&
                      pairing(m, m.P, m.P) == BigRat(4);
      return expect(ok, "degree data mismatch");
    });
    r.emplace_back(tag + ": g square-free of degree 14, small degrees excluded", [a, b] {
      const MestreInstance m = build_mestre(BigRat(a), BigRat(b));
      return expect(m.g_integral.degree() == 14 && small_degree_exclusion(m), "exclusion fails");
    });
  }
  r.emplace_back("(a,b) = (1,1), t0 = 3, declared rank 2: rank 2 with free generators P, Q", [] {
    const MestreConclusion c = generator_certificate(build_mestre(BigRat(1), BigRat(1)), BigRat(3), 2,
                                                     "declared input", std::string("declared input"));
    return expect(c.rank_two_proved, "no rank-2 conclusion");
  });
  r.emplace_back("(a,b) = (2,12): scriptA holds at t0 = 4", [] {
    std::vector<std::string> notes;
    const auto ev = injectivity_evidence(build_mestre(BigRat(2), BigRat(12)), BigRat(4), notes);
    return expect(ev.certificate && ev.certificate->condition == Condition::ScriptA, "no certificate");
  });
  return r;
}

}  // namespace

std::vector<GoldenRow> run_golden_suite() {
  std::vector<GoldenRow> out;
  for (auto& [name, check] : rows()) {
    GoldenRow row{name, false, {}};
    try {
      row.detail = check();
      row.passed = row.detail.empty();
    } catch (const std::exception& e) {
      row.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ellspec::cli
