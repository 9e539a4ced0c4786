#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace veech {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitMalformed = 2, kExitPrecondition = 3 };

/// Runs one command line (args excludes the program name). JSON goes to `out`,
/// diagnostics and timing to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace veech
