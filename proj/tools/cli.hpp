#pragma once

#include <iosfwd>

namespace skg::cli {

// Exit codes: 0 success, 1 usage or parameter error, 2 verification failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skg::cli
