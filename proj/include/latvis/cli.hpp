#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latvis {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitResource = 3 };

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latvis
