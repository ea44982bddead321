#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracdiff::cli {

/// Exit codes: 0 pass, 1 tolerance failure, 2 usage or parameter error.
enum ExitCode : int { kPass = 0, kToleranceFail = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name). CSV goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.17g")
std::string format_number(double v);

} // namespace fracdiff::cli
