#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slcinv::cli {

// Exit codes of the slcinv tool.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kUnsupported = 4,
};

// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slcinv::cli
