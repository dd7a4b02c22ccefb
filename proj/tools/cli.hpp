#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flipforge::cli {

/// Exit codes: 0 success / verdict pass, 1 verdict fail, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flipforge::cli
