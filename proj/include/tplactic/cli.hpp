#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tplactic {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerification = 1, // check failure, invariant violation, asserted equivalence false
  kExitUsage = 2,        // parse or usage error
};

// Runs one CLI invocation. args[0] is the program name. Output goes to
// `out`; diagnostics to `err` (as JSON when --json is given).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tplactic
