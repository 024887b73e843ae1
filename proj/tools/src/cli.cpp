#include "cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ellspec/certificate.hpp"
#include "ellspec/curve_text.hpp"
#include "ellspec/mestre.hpp"
#include "ellspec/poly_factor.hpp"
#include "ellspec/specialize.hpp"
#include "golden.hpp"
#include "json.hpp"

namespace ellspec::cli {

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --curve accepts a file name or the curve text itself.
std::string curve_text(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::string s = read_file(arg);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  }
  return arg;
}

Condition condition_arg(const std::string& name) {
  auto c = parse_condition(name);
  if (!c) throw std::invalid_argument("unknown condition '" + name + "' (A, Aprime, scriptA, A1B)");
  return *c;
}

std::string factorization_text(const Factorization& f) {
  std::string s = f.unit < 0 ? "-1" : "1";
  for (const PrimePower& p : f.content_primes) {
    s += " * " + p.prime.to_string();
    if (p.exponent > 1) s += "^" + std::to_string(p.exponent);
  }
  for (const auto& [p, e] : f.poly_factors) {
    s += " * (" + p.to_string() + ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

void print_report(std::ostream& out, const ConditionReport& r) {
  out << (r.passed ? "PASS" : "FAIL") << "  condition " << condition_name(r.condition) << " at t0 = "
      << r.t0.to_string() << "\n";
  out << "  curve: " << r.input << "\n";
  if (r.model != r.input) out << "  model: " << r.model << "\n";
  out << "  D(t0) = " << r.discriminant_at_t0.to_string() << "\n";
  out << "  divisors checked: " << r.checks.size() << "\n";
  if (auto w = r.witness()) {
    out << "  witness: " << w->divisor.to_string() << " (divisor of " << w->target << ") = " << w->value.to_string()
        << ", a square\n";
  }
  if (r.constant_reading_passed && *r.constant_reading_passed != r.passed) {
    out << "  with constant divisors included: " << (*r.constant_reading_passed ? "PASS" : "FAIL") << "\n";
  }
  if (r.a1_passed) out << "  A1: " << (*r.a1_passed ? "pass" : "fail") << "\n";
  if (r.b_passed) out << "  B: " << (*r.b_passed ? "pass" : "fail") << "\n";
  for (const std::string& n : r.notes) out << "  note: " << n << "\n";
}

int cmd_factor(const std::string& poly, bool as_json, std::ostream& out) {
  const IntPoly p = parse_poly(poly);
  const Factorization f = factor(p);
  if (f.recompose() != p) throw std::logic_error("factorization does not recompose");
  if (as_json) {
    json primes = json::array(), polys = json::array();
    for (const PrimePower& q : f.content_primes) primes.push_back({{"prime", q.prime.to_string()}, {"exponent", q.exponent}});
    for (const auto& [q, e] : f.poly_factors) polys.push_back({{"factor", q.to_string()}, {"multiplicity", e}});
    out << json{{"input", p.to_string()}, {"unit", f.unit}, {"content_primes", primes}, {"factors", polys}}.dump(2)
        << "\n";
  } else {
    out << p.to_string() << " = " << factorization_text(f) << "\n";
  }
  return kPass;
}

int cmd_check(const std::string& cond, const std::string& curve, const std::string& t0, const std::string& replay,
              bool as_json, std::ostream& out, std::ostream& err) {
  if (!replay.empty()) {
    const Verification v = verify_certificate(read_file(replay));
    if (as_json) {
      out << json{{"reproduced", v.reproduced}, {"passed", v.passed}, {"certificate_valid", v.certificate_valid},
                  {"detail", v.detail}}
                 .dump(2)
          << "\n";
    } else {
      out << (v.reproduced ? "REPLAY OK" : "REPLAY MISMATCH") << "  verdict " << (v.passed ? "PASS" : "FAIL")
          << (v.certificate_valid ? "  valid injectivity certificate" : "") << "\n";
      if (!v.detail.empty()) out << "  " << v.detail << "\n";
    }
    return v.reproduced && v.passed ? kPass : kFail;
  }
  if (cond.empty() || curve.empty() || t0.empty()) {
    err << "check: --condition, --curve and --t0 are required (or --replay)\n";
    return kUsage;
  }
  const ConditionReport r = check_condition(parse_curve(curve_text(curve)), condition_arg(cond), parse_rational(t0));
  if (as_json) {
    out << report_to_json(r);
  } else {
    print_report(out, r);
  }
  return r.passed ? kPass : kFail;
}

int cmd_find_t0(const std::string& cond, const std::string& curve, long budget, long height, bool as_json,
                std::ostream& out) {
  const SearchResult s = find_t0(parse_curve(curve_text(curve)), condition_arg(cond), SearchBudget{budget, height});
  if (as_json) {
    if (s.report) {
      out << report_to_json(*s.report);
    } else {
      out << json{{"found", false}, {"candidates", s.candidates}}.dump(2) << "\n";
    }
  } else if (s.report) {
    out << "t0 = " << s.report->t0.to_string() << " (candidate " << s.candidates << ")\n";
    print_report(out, *s.report);
  } else {
    out << "no t0 within budget (" << s.candidates << " candidates); this does not disprove injectivity\n";
  }
  return s.report ? kPass : kFail;
}

int cmd_specialize(const std::string& curve, const std::string& point, const std::string& t0, bool as_json,
                   std::ostream& out) {
  const CurveQt e = parse_curve(curve_text(curve));
  const BigRat t = parse_rational(t0);
  const CurveQ e0 = specialize_curve(e, t);
  std::optional<PointQ> p0;
  if (!point.empty()) p0 = specialize_point(e, parse_point(point), t);
  if (as_json) {
    json j{{"curve", e0.to_string()}, {"t0", t.to_string()}};
    if (p0) j["point"] = p0->to_string();
    out << j.dump(2) << "\n";
  } else {
    out << e0.to_string() << "\n";
    if (p0) out << p0->to_string() << "\n";
  }
  return kPass;
}

struct MestreArgs {
  std::string a, b, t0, rank_source, declared;
  std::optional<long> rank;
};

int cmd_mestre(const MestreArgs& args, bool as_json, std::ostream& out) {
  const MestreInstance m = build_mestre(parse_rational(args.a), parse_rational(args.b));
  if (args.rank) {
    if (args.t0.empty() || args.rank_source.empty()) {
      throw std::invalid_argument("--specialized-rank needs --t0 and --rank-source");
    }
    std::optional<std::string> declared;
    if (!args.declared.empty()) declared = args.declared;
    const MestreConclusion c = generator_certificate(m, parse_rational(args.t0), *args.rank, args.rank_source, declared);
    if (as_json) {
      out << conclusion_to_json(c);
    } else {
      out << "deg phi_P = " << c.deg_p << ", deg phi_Q = " << c.deg_q << ", deg phi_(P+Q) = " << c.deg_p_plus_q
          << ", deg phi_(P-Q) = " << c.deg_p_minus_q << ", <P,Q> = " << c.pairing_pq.to_string() << "\n";
      if (c.injectivity.certificate) print_report(out, *c.injectivity.certificate);
      if (c.injectivity.declared_source) out << "injectivity declared: " << *c.injectivity.declared_source << "\n";
      out << "specialized rank " << c.specialized_rank << " (" << c.rank_source << ")\n";
      for (const std::string& n : c.notes) out << "note: " << n << "\n";
      for (const std::string& s : c.conclusions) out << s << "\n";
    }
    return kPass;
  }
  const int dp = morphism_degree(m, m.P), dq = morphism_degree(m, m.Q);
  const int ds = morphism_degree(m, m.curve.add(m.P, m.Q)), dd = morphism_degree(m, m.curve.sub(m.P, m.Q));
  const BigRat pq = pairing(m, m.P, m.Q);
  std::vector<std::string> notes;
  std::optional<InjectivityEvidence> ev;
  if (!args.t0.empty()) ev = injectivity_evidence(m, parse_rational(args.t0), notes);
  if (as_json) {
    json j{{"a", m.a.to_string()},
           {"b", m.b.to_string()},
           {"g", m.g.to_string()},
           {"curve", m.curve.to_string()},
           {"P", m.P.to_string()},
           {"Q", m.Q.to_string()},
           {"deg_phi_P", dp},
           {"deg_phi_Q", dq},
           {"deg_phi_P_plus_Q", ds},
           {"deg_phi_P_minus_Q", dd},
           {"pairing_PQ", pq.to_string()},
           {"small_degree_exclusion", small_degree_exclusion(m)},
           {"notes", notes}};
    if (ev && ev->certificate) j["certificate"] = json::parse(report_to_json(*ev->certificate));
    if (ev && ev->diagnostic) j["diagnostic"] = json::parse(report_to_json(*ev->diagnostic));
    out << j.dump(2) << "\n";
  } else {
    out << "g = " << m.g.to_string() << "\n";
    out << "E_g: " << m.curve.to_string() << "\n";
    out << "deg phi_P = " << dp << ", deg phi_Q = " << dq << ", deg phi_(P+Q) = " << ds << ", deg phi_(P-Q) = " << dd
        << ", <P,Q> = " << pq.to_string() << "\n";
    out << "small-degree exclusion: " << (small_degree_exclusion(m) ? "holds" : "fails") << "\n";
    if (ev && ev->certificate) print_report(out, *ev->certificate);
    if (ev && ev->diagnostic) print_report(out, *ev->diagnostic);
    for (const std::string& n : notes) out << "note: " << n << "\n";
  }
  return ev && !ev->certificate ? kFail : kPass;
}

int cmd_verify_paper(bool as_json, std::ostream& out) {
  const std::vector<GoldenRow> rows = run_golden_suite();
  bool all = true;
  json j = json::array();
  for (const GoldenRow& r : rows) {
    all = all && r.passed;
    if (as_json) {
      j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
      if (!r.detail.empty()) out << "  [" << r.detail << "]";
      out << "\n";
    }
  }
  if (as_json) {
    out << j.dump(2) << "\n";
  } else {
    std::size_t n = 0;
    for (const GoldenRow& r : rows) n += r.passed ? 1 : 0;
    out << n << "/" << rows.size() << " golden rows pass\n";
  }
  return all ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Injectivity certificates for specializations of elliptic curves over Q(t)", "ellspec"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial in Z[t]");
  std::string poly;
  factor_cmd->add_option("poly", poly, "polynomial, e.g. t^4+4")->required();
  factor_cmd->add_flag("--json", as_json);

  std::string cond, curve, t0, replay, point;
  auto* check_cmd = app.add_subcommand("check", "evaluate an injectivity condition at t0");
  check_cmd->add_option("--condition", cond, "A, Aprime, scriptA or A1B");
  check_cmd->add_option("--curve", curve, "curve text or file");
  check_cmd->add_option("--t0", t0, "rational specialization point");
  check_cmd->add_option("--replay", replay, "re-verify a JSON report");
  check_cmd->add_flag("--json", as_json);

  long budget = SearchBudget{}.max_integer, height = SearchBudget{}.max_height;
  auto* find_cmd = app.add_subcommand("find-t0", "first t0 in the fixed order satisfying a condition");
  find_cmd->add_option("--condition", cond)->required();
  find_cmd->add_option("--curve", curve)->required();
  find_cmd->add_option("--budget", budget, "largest |t0| among integers")->check(CLI::NonNegativeNumber);
  find_cmd->add_option("--max-height", height, "largest height of non-integral t0")->check(CLI::NonNegativeNumber);
  find_cmd->add_flag("--json", as_json);

  auto* spec_cmd = app.add_subcommand("specialize", "evaluate a curve (and point) at t0");
  spec_cmd->add_option("--curve", curve)->required();
  spec_cmd->add_option("--point", point, "O or (x, y)");
  spec_cmd->add_option("--t0", t0)->required();
  spec_cmd->add_flag("--json", as_json);

  MestreArgs margs;
  long rank = 0;
  auto* mestre_cmd = app.add_subcommand("mestre", "twist family E_g^{a,b}: degrees, pairing, generator statement");
  mestre_cmd->add_option("--a", margs.a)->required();
  mestre_cmd->add_option("--b", margs.b)->required();
  mestre_cmd->add_option("--t0", margs.t0);
  auto* rank_opt = mestre_cmd->add_option("--specialized-rank", rank, "rank of E_g(t0)(Q), computed elsewhere");
  mestre_cmd->add_option("--rank-source", margs.rank_source, "where the specialized rank comes from");
  mestre_cmd->add_option("--declared-injectivity", margs.declared,
                         "source for injectivity at t0 when no certificate can be computed over Q");
  mestre_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify-paper", "recompute every published example");
  verify_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*factor_cmd) return cmd_factor(poly, as_json, out);
    if (*check_cmd) return cmd_check(cond, curve, t0, replay, as_json, out, err);
    if (*find_cmd) return cmd_find_t0(cond, curve, budget, height, as_json, out);
    if (*spec_cmd) return cmd_specialize(curve, point, t0, as_json, out);
    if (*mestre_cmd) {
      if (*rank_opt) margs.rank = rank;
      return cmd_mestre(margs, as_json, out);
    }
    if (*verify_cmd) return cmd_verify_paper(as_json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace ellspec::cli
