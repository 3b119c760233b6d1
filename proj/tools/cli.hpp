#pragma once

#include <iosfwd>

namespace kprimes::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kValidation = 2,
  kDependency = 3,
  kPrecision = 4,
  kRange = 5,
  kIncomplete = 6,
};

/// Parses argv and runs one subcommand, writing results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kprimes::cli
