#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mstd::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;

/// Runs the command line `args` (without the program name), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mstd::cli
