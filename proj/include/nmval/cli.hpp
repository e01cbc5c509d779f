#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nmval::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kParseError = 2,
  kSemanticError = 3,
  kResourceError = 4,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nmval::cli
