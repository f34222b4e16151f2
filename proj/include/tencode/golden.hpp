#pragma once

#include <string>
#include <vector>

#include "tencode/limits.hpp"

namespace tencode {

struct GoldenResult {
    std::string name;
    bool pass = false;
    std::string detail;  ///< computed values, or the error that stopped the check
};

/// Every worked example shipped in fixtures.hpp, checked against its stated values.
/// With a non-empty prefix only the checks whose name starts with it are run.
std::vector<GoldenResult> run_golden_suite(const Limits& limits = Limits{}, const std::string& prefix = "");

} // namespace tencode
