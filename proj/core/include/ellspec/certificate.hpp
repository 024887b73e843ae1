#pragma once

// JSON form of condition reports. A passing certifying report is an
// injectivity certificate; verify_certificate replays it from the curve text.

#include <string>
#include <string_view>

#include "ellspec/injectivity.hpp"

namespace ellspec {

inline constexpr const char* kCertificateFormat = "ellspec-condition-report/1";

/// Deterministic, pretty-printed JSON (sorted keys).
std::string report_to_json(const ConditionReport& report);

/// Parses JSON written by report_to_json. Throws std::invalid_argument on malformed input.
ConditionReport report_from_json(std::string_view json);

struct Verification {
  /// Recomputation from scratch reproduced every field of the input.
  bool reproduced = false;
  /// The recomputed verdict.
  bool passed = false;
  /// The input is a passing report of a certifying condition and reproduced.
  bool certificate_valid = false;
  std::string detail;
};

/// Re-parses the curve, re-enumerates every divisor and re-evaluates every value.
Verification verify_certificate(std::string_view json);

}  // namespace ellspec
