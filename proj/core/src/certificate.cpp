#include "ellspec/certificate.hpp"

#include <stdexcept>

#include "ellspec/curve_text.hpp"
#include "json.hpp"

namespace ellspec {

using nlohmann::json;

std::string report_to_json(const ConditionReport& r) {
  json checks = json::array();
  for (const DivisorCheck& c : r.checks) {
    checks.push_back({{"target", c.target}, {"divisor", c.divisor.to_string()}, {"value", c.value.to_string()},
                      {"square", c.square}});
  }
  json j = {{"format", kCertificateFormat},
            {"condition", condition_name(r.condition)},
            {"curve", r.input},
            {"model", r.model},
            {"t0", r.t0.to_string()},
            {"discriminant_at_t0", r.discriminant_at_t0.to_string()},
            {"passed", r.passed},
            {"certifying", r.certifying},
            {"checks", checks},
            {"notes", r.notes}};
  if (r.constant_reading_passed) j["constant_reading_passed"] = *r.constant_reading_passed;
  if (r.a1_passed) j["a1_passed"] = *r.a1_passed;
  if (r.b_passed) j["b_passed"] = *r.b_passed;
  if (auto w = r.witness()) {
    j["witness"] = {{"target", w->target}, {"divisor", w->divisor.to_string()}, {"value", w->value.to_string()}};
  }
  return j.dump(2) + "\n";
}

ConditionReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != kCertificateFormat) {
      throw std::invalid_argument("unknown format " + j.at("format").get<std::string>());
    }
    ConditionReport r;
    auto cond = parse_condition(j.at("condition").get<std::string>());
    if (!cond) throw std::invalid_argument("unknown condition");
    r.condition = *cond;
    r.input = j.at("curve").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.t0 = BigRat::from_string(j.at("t0").get<std::string>());
    r.discriminant_at_t0 = BigRat::from_string(j.at("discriminant_at_t0").get<std::string>());
    r.passed = j.at("passed").get<bool>();
    r.certifying = j.at("certifying").get<bool>();
    for (const json& c : j.at("checks")) {
      r.checks.push_back({c.at("target").get<std::string>(), parse_poly(c.at("divisor").get<std::string>()),
                          BigRat::from_string(c.at("value").get<std::string>()), c.at("square").get<bool>()});
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("constant_reading_passed")) r.constant_reading_passed = j["constant_reading_passed"].get<bool>();
    if (j.contains("a1_passed")) r.a1_passed = j["a1_passed"].get<bool>();
    if (j.contains("b_passed")) r.b_passed = j["b_passed"].get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

Verification verify_certificate(std::string_view text) {
  const ConditionReport claimed = report_from_json(text);
  Verification v;
  const ConditionReport fresh = check_condition(parse_curve(claimed.input), claimed.condition, claimed.t0);
  v.passed = fresh.passed;
  v.reproduced = fresh == claimed;
  v.certificate_valid = v.reproduced && fresh.passed && fresh.certifying;
  if (!v.reproduced) {
    v.detail = "recomputed report differs from the input";
  } else if (!fresh.certifying) {
    v.detail = "reproduced; condition " + condition_name(fresh.condition) + " is not an injectivity certificate";
  } else {
    v.detail = fresh.passed ? "reproduced; certificate valid" : "reproduced; condition fails";
  }
  return v;
}

}  // namespace ellspec
