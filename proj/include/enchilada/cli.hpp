#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace enchilada::cli {

/// Exit codes: verdict true / verdict false / bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (args excludes the program name). The JSON report
/// goes to `out`, preceded by a human-readable summary unless --json-only is
/// given; diagnostics for input errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enchilada::cli
