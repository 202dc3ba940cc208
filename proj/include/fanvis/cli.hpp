#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanvis::cli {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kPass = 0,     // pass / yes
  kFail = 1,     // fail / no
  kUnknown = 2,  // unknown
  kInputError = 3,
};

// Runs the command line (args excludes the program name). Input files named
// "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fanvis::cli
