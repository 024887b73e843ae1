#pragma once

#include <ostream>

namespace ellspec::cli {

/// Exit codes: 0 pass, 1 condition fail, 2 usage/parse/precondition error,
/// 3 internal invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ellspec::cli
