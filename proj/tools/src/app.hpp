#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permcluster::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line (args excludes the program name), writing the
/// document to `out` or to --output, and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permcluster::cli
