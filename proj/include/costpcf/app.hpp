#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace costpcf {

/// Exit statuses of the command-line tool.
enum ExitCode { kOk = 0, kUserError = 1, kCheckFailed = 2, kInternal = 3 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`; diagnostics and usage to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace costpcf
