#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faulhaber::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kNotIntegral = 1,  // `check` only
  kUsageError = 2,
  kInconsistent = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faulhaber::cli
