#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlemap::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 1,
  kNotConverged = 2,
  kVerifyFailed = 3,
};

/// Runs one command line (without the program name). Reports go to the paths
/// given by --out, or to `out` when none is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circlemap::cli
