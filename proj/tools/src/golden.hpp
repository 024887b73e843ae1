#pragma once

#include <string>
#include <vector>

namespace ellspec::cli {

struct GoldenRow {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every published example the library reproduces, recomputed from scratch.
std::vector<GoldenRow> run_golden_suite();

}  // namespace ellspec::cli
