#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cesaro::cli {

inline constexpr const char* kSchema = "cesaro-lab/1";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { ok = 0, math_failure = 1, usage_error = 2 };

/// Runs the command line (args excludes the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cesaro::cli
