#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeala {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Runs one CLI invocation. args excludes the program name. The JSON report
/// goes to out (or to --output, with a one-line summary per check on out);
/// diagnostics and the first counterexample of a failed check go to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qeala
