#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circulant::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace circulant::cli
