#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flc {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

/// Runs the command line given without the program name. All output goes to
/// `out` and diagnostics to `err`; returns one of the ExitCode values.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flc
