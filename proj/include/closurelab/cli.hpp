#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace closurelab::cli {

inline constexpr const char* version = "0.1.0";

enum ExitCode : int {
    Ok = 0,
    Usage = 2,
    NotStabilized = 3,
    Hypothesis = 4,
    Internal = 5,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace closurelab::cli
