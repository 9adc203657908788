#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcb {

/// Exit codes of the tcbounds tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kVerification = 2, kResource = 3 };

/// Parses `args` (without the program name), dispatches, and writes the
/// result to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcb
