#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srp::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name), writing reports to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srp::cli
