#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bispace::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  /// The property checked is false, or a witness was found.
  kWitness = 1,
  /// Unknown command, bad flag, unreadable or invalid input.
  kInputError = 2,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bispace::cli
