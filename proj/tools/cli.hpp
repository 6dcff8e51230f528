#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace springer_rca::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kUnsupported = 3,
  kUnderTruncation = 4,
};

/// Runs one invocation. `args` excludes the program name; reports go to `out` (or the
/// --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer_rca::cli
