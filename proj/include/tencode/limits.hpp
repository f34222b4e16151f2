#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tencode {

/// Work caps for exhaustive searches.
struct Limits {
    std::uint64_t objects = 10'000'000;   ///< enumerated subspaces / codewords / anticodes
    std::uint64_t rank_nodes = 1'000'000; ///< nodes visited by one rank search
};

/// Thrown when a search would exceed its budget.  Carries whatever bounds are known.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, long long lower = -1, long long upper = -1)
        : std::runtime_error(what), lower_(lower), upper_(upper) {}
    long long lower() const { return lower_; }
    long long upper() const { return upper_; }

private:
    long long lower_, upper_;
};

} // namespace tencode
