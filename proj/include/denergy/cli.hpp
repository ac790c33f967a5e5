#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace denergy {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on args (without the program name). Reports go to out unless
/// --output is given; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace denergy
