#pragma once

#include <iosfwd>

namespace persuade::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitConsistencyError = 3;

/// Entry point of the `persuade` command. Prints a single-line JSON summary
/// (or error object) to `out`; help text goes to `out` as well.
int run_cli(int argc, const char* const* argv, std::ostream& out);

}  // namespace persuade::cli
