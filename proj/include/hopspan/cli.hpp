#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopspan::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

// Runs the command line `args` (program name excluded). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopspan::cli
