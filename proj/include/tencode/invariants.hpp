#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "tencode/anticode.hpp"

namespace tencode {

/**
 * @brief Generalized tensor weight t_j: least dim A over family members with dim(C ∩ A) >= j.
 *
 * For Perfect this is the least tensor rank of a j-dimensional subcode.
 */
std::size_t generalized_weight(const TensorCode& c, Family fam, std::size_t j, const Limits& limits = Limits{});

/// t_1, ..., t_k for the family.
std::vector<std::size_t> weight_profile(const TensorCode& c, Family fam, const Limits& limits = Limits{});

/// s_1, ..., s_k: the same minimum over the dual family (cl uses DualClosureType).
std::vector<std::size_t> dual_weight_profile(const TensorCode& c, Family fam, const Limits& limits = Limits{});
std::size_t generalized_dual_weight(const TensorCode& c, Family fam, std::size_t j, const Limits& limits = Limits{});

/// Profile over every member of the given family, one pass over the enumeration.
std::vector<std::size_t> profile_by_enumeration(const TensorCode& c, Family fam, const Limits& limits = Limits{});
/// min over j-dim subcodes D of dim cl(D).
std::size_t closure_weight_by_subcodes(const TensorCode& c, std::size_t j, const Limits& limits = Limits{});

/// Property violations of a single profile (empty when consistent).
std::vector<std::string> profile_violations(const TensorCode& c, Family fam, const std::vector<std::size_t>& t);

struct TbmdReport {
    Family family;
    std::vector<std::size_t> t;          ///< t_j of C
    std::optional<std::size_t> dual_s1;  ///< s_1 of C^⊥ in the dual family; empty if C^⊥ = 0
    std::vector<bool> tbmd;              ///< tbmd[j-1]
    std::optional<std::size_t> minimal_j;
};

TbmdReport tbmd_classify(const TensorCode& c, Family fam, const Limits& limits = Limits{});

/// r = 2 only: n_1 - d_j - d^⊥ < 0 with d_j = t_j^D / n_2.
bool is_jbmd_r2(const TensorCode& c, std::size_t j, const Limits& limits = Limits{});

struct WeiSets {
    std::size_t p;
    std::set<std::size_t> dual_side;  ///< S_p(C^⊥)
    std::set<std::size_t> code_side;  ///< S̄_{p+k}(C)
    bool partition;                   ///< dual_side = [n_1] \ code_side
};

/**
 * @brief Wei-type duality for the Ravagnani profile, one entry per p in [n/n_1].
 *
 * With g = n/n_1:  S_p(C^⊥) = { t^R_i(C^⊥)/g : i ≡ p mod g, 1 <= i <= n-k } and
 * S̄_{p+k}(C) = { n_1 + 1 - t^R_i(C)/g : i ≡ p+k mod g, 1 <= i <= k }.
 */
std::vector<WeiSets> wei_duality(const TensorCode& c, const Limits& limits = Limits{});

} // namespace tencode
