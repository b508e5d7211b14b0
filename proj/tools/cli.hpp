#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xapprox::cli {

/// Exit codes: 0 success, 1 failed check or numerical failure, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (without the program name). Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a", "a:b" or "a:b:step" with inclusive endpoints (default step 1).
std::vector<double> parse_range(const std::string& text);

}  // namespace xapprox::cli
