#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace berndenom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line given as argv (argv[0] is the program name) and
/// writes to out/err. Returns the process exit status.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// Parses counts written as 1000, 10^6 or 1e6. Throws std::invalid_argument.
std::uint64_t parse_count(const std::string& text);

}  // namespace berndenom::cli
