#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fermatlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

/// Parses `args` (program name excluded) and runs one subcommand. JSON goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermatlab::cli
