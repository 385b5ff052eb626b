#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taptest::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kIoError = 3 };

/// Runs the command line `args` (without the program name). Diagnostics go to
/// `err` as a single line; reports and tables go to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taptest::cli
