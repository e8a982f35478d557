#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goodorient {

/// Exit codes of every command.
inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;  // negative decision, certificate on stdout
inline constexpr int kExitError = 2;     // usage or input error, one line on stderr

/// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goodorient
