#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace farey::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 2;
inline constexpr int kCrossCheckFailure = 3;

// Runs one command. args excludes the program name. CSV goes to --out when
// given, otherwise to out; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace farey::cli
