#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uenv::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kBadFrame = 3;
inline constexpr int kBadValue = 4;
inline constexpr int kUnwritable = 5;

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uenv::cli
