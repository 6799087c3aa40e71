#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strongcp::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNegativeVerdict = 1,
  kParseError = 2,
  kDimensionError = 3,
  kPropertyViolation = 4,
  kSizeGuard = 5,
  kOracleDisagreement = 6,
};

/// Runs one command line (arguments without the program name). Reports go
/// to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongcp::cli
