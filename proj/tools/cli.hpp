#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace partic::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kMalformedInput = 2;

// Runs the command line `args` (without the program name). Output goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partic::cli
