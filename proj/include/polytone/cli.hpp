#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polytone/error.hpp"

namespace polytone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitDegenerate = 4;
inline constexpr int kExitNodeOrder = 5;

int exit_code_for(ErrorKind kind);

/// Runs one invocation. args[0] is the program name. Diagnostics go to
/// `err` as a single line; CSV/JSON output without -o goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polytone::cli
