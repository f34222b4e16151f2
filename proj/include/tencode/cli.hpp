#pragma once

#include <iosfwd>

namespace tencode {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 1,   ///< malformed input, unknown family, bad arguments
    kExitBudget = 2,  ///< a search ran out of budget; partial bounds are reported
    kExitFailed = 3,  ///< verify-suite found a failing example
};

/// Runs `tencode` with the given arguments; the report goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tencode
