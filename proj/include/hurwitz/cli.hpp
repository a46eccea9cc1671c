#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hurwitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; one-line diagnostics for invalid arguments go to `err`.
/// Returns 0 on success, 1 on a verify-paper mismatch, 2 on invalid arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
