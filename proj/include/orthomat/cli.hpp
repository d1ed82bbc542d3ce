#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthomat::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResourceLimit = 3;
inline constexpr int kInternalError = 4;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthomat::cli
