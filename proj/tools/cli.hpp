#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace algkit::cli {

/// Process exit codes. Stable contract.
enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kNotAssociative = 2,
  kParameterFailure = 3,
  kIoFailure = 4,
  kUsage = 64,
};

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algkit::cli
