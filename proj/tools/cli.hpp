#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace assort::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or data error
inline constexpr int kExitUsage = 2;

/// Entry point behind the `assort` binary. Data goes to `out`, diagnostics
/// and the one-line error reason to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

/// Parses "1024,2^12,2^10..2^14" into a list; ".." steps by doubling.
/// Throws std::invalid_argument.
std::vector<std::size_t> parse_size_list(const std::string& text);

}  // namespace assort::cli
