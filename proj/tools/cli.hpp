#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spliffer::cli {

enum ExitCode : int { Affirmative = 0, Negative = 1, UsageError = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace spliffer::cli
