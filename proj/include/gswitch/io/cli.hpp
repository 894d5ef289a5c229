#pragma once

#include <iosfwd>

namespace gswitch {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitTrue = 0,     // verified / found / equivalent
  kExitFalse = 1,    // refuted / absent / not equivalent
  kExitUnknown = 2,  // budget ran out
  kExitInput = 3,    // bad arguments or input files
};

/// Runs the command-line tool in-process: results go to `out`, progress and
/// errors to `err`. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gswitch
