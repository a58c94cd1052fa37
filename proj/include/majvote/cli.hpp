// Command-line front end: simulate, exact, limit, sweep, exponent, figure.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majvote::cli {

inline constexpr int kRuntimeError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (program name excluded). Results go to `out`
/// unless redirected by --output; one-line diagnostics go to `err`.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majvote::cli
