#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaptopo::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaptopo::cli
