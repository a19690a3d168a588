#pragma once

// Built-in invariant suites run by `cmint selfcheck`.

#include <string>
#include <vector>

#include "cmint/logcombo.hpp"

namespace cmint {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Suites: "small" (seconds) and "full" (the complete route sweep).
std::vector<CheckResult> run_selfcheck(const std::string& suite);

Json selfcheck_json(const std::string& suite, const std::vector<CheckResult>& results);

}  // namespace cmint
