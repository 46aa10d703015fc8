#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ssp::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitBudget = 4;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssp::cli
