#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acyclic {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerifyFailed = 2 };

/// Runs the command line tool. `args` excludes the program name. `in` backs
/// lonesum-check when no file is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace acyclic
