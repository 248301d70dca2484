#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlag::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInconclusive = 3;
inline constexpr int kResourceLimit = 4;

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlag::cli
