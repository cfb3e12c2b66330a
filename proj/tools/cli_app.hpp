#pragma once

#include <ostream>

namespace caweave::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2, kInvariantBreach = 3 };

// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace caweave::cli
