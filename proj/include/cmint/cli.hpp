#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace cmint {

/// Exit codes: 0 success, 1 usage or failed self-check, 2 invalid field,
/// 3 internal consistency error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the error report for `e` and returns its exit code.
int report_error(const std::exception& e, std::ostream& out, std::ostream& err);

/// "5", "1-10", "1,3,7-9" -> ascending, deduplicated positive integers.
std::vector<long> parse_range(const std::string& text);

}  // namespace cmint
