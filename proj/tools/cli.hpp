#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace randic::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kClaimFailed = 2;
inline constexpr int kIoError = 3;

/// Runs one subcommand. `args` excludes the program name. Graph input is
/// read from `in` unless --in is given; output goes to `out` unless --out
/// is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace randic::cli
