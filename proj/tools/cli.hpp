#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace uflab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Reports go to `out` (or --out), usage
/// errors and diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace uflab::cli
