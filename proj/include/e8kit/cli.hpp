#pragma once

// Command-line front end.  Exit codes: 0 success, 2 parse or input error,
// 3 internal invariant failure.

#include <ostream>
#include <string>
#include <vector>

namespace e8kit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvariant = 3;

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e8kit
