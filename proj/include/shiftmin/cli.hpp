#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftmin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args exclude the program name). Output goes to out,
// diagnostics to err; returns the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace shiftmin::cli
