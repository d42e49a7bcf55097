#pragma once

#include <ostream>

namespace loopkit::cli {

/// Parses argv, runs one subcommand and writes the result to `out`
/// (diagnostics to `err`).  Returns the process exit code: 0 on success,
/// 2 on invalid input, 3 on a verification failure, 4 on a resource-cap
/// breach.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loopkit::cli
