#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdiam {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,     // a check, sweep or oracle comparison failed
  kExitResourceCap = 2,  // budget or timeout hit
  kExitUsage = 3,        // invalid flags, parameters or input files
};

/// Runs the qdiam command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdiam
