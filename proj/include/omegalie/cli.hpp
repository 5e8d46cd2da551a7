#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omegalie::cli {

enum ExitCode : int { Pass = 0, MathFailure = 1, UsageError = 2 };

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegalie::cli
