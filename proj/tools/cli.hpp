#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strongce::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // usage error, or a coloring that does not verify
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitColoring = 4;

/// Runs `strongce <args...>` (args exclude the program name) and returns the
/// exit status. Regular output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongce::cli
