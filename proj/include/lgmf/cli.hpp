#pragma once

#include <iosfwd>

namespace lgmf::cli {

/// Exit codes of the command line tool.
enum Exit : int { ok = 0, check_failed = 1, usage = 2 };

/// Runs one subcommand. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lgmf::cli
