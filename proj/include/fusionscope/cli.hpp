#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fusionscope {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInputError = 2,
  kExitResourceLimit = 3,
};

/// Runs one command.  args excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fusionscope
