#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frs::cli {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr const char* report_schema = "frs-report-1";

/// 0 pass, 1 mathematical failure, 2 bad input, 3 cap or budget exhausted.
enum Exit : int { pass = 0, failure = 1, bad_input = 2, exhausted = 3 };

/// Entry point without the program name; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frs::cli
