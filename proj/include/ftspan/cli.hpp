#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ftspan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification or contract check failed
inline constexpr int kExitUsage = 2;   // bad flags, unreadable input, refused budget

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ftspan
