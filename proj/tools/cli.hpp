#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ita::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // inconsistent, not entailed, violations, failed fixtures
  kUsage = 2,     // bad flags, unreadable or malformed input
  kUnknown = 3,   // chase bound reached before a decision
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ita::cli
