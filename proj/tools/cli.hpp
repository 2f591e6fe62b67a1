#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diffauction::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lines printed by --version after the version string: golden values recomputed
/// from the library, followed by an FNV-1a digest of those lines.
std::vector<std::string> golden_lines();

}  // namespace diffauction::cli
