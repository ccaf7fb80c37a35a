#pragma once

#include <ostream>

namespace semicore::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semicore::cli
