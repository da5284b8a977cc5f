#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hfib::cli {

enum class OutputFormat { Plain, Json, Csv };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Evaluation points of the zeta convergence table: 1, 2, 5, 10, 20, 50, ...
/// up to n_max, always ending with n_max itself.
std::vector<std::int64_t> zeta_schedule(std::int64_t n_max);

}  // namespace hfib::cli
