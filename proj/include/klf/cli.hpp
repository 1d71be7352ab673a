#pragma once

#include <iosfwd>

namespace klf {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitParse = 2, kExitDomain = 3 };

/// Entry point of the command-line tool; writes JSON lines to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klf
