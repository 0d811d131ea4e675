#pragma once

#include <iosfwd>

namespace clat {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  exit_ok = 0,
  exit_no = 1,
  exit_unknown = 2,
  exit_precondition = 3,
  exit_usage = 64,
};

/// Runs the clat command line with the given arguments (argv[0] is the
/// program name). Results go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clat
