#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tlh::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name) and returns the
/// exit status. Reports go to `out` unless --out is given; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlh::cli
