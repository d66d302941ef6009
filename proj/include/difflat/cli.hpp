#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace difflat {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitClean = 0,
  kExitViolation = 1,
  kExitUsage = 2,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace difflat
