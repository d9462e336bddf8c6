#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tinlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;

/// Runs one subcommand (power, lift, pack, solve, verify, gen, oracle).
/// `args` excludes the program name. Certificates go to `out` as JSON lines;
/// diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tinlab::cli
