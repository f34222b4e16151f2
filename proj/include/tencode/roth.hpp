#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tencode/code.hpp"
#include "tencode/gfq.hpp"

namespace tencode {

/**
 * @brief Parameters of the order-3 Roth construction over GF(p).
 *
 * The extension field is GF(p^mu) and the code lives in F_p^mu x F_p^mu x F_p^mu.
 * `nu` is carried only as part of the label C(mu, nu, 3; p).
 */
struct RothParams {
    std::size_t mu = 0;
    std::size_t nu = 0;
    FieldPtr base;        ///< GF(p)
    FieldPtr ext;         ///< GF(p^mu)
    FieldBasis alpha, beta, omega;

    Dims dims() const { return {mu, mu, mu}; }
    std::string label() const;
};

/// Polynomial bases for alpha, beta and omega; modulus defaults to Field::of_order.
RothParams roth_params(std::size_t mu, std::size_t nu, int p,
                       const std::optional<std::vector<int>>& modulus = std::nullopt);

/// Does some [n, k, >= d] linear code over GF(q) exist?  Exhaustive over k-subspaces.
bool block_code_exists(int q, std::size_t n, std::size_t k, std::size_t d, const Limits& limits = Limits{});

using IndexPair = std::pair<std::size_t, std::size_t>;

struct RothIndexSets {
    std::vector<IndexPair> s;      ///< (l, s) with an [mu, l+1, >= s+1] code, lexicographic
    std::vector<IndexPair> s_bar;  ///< the rest of [0, mu)^2
};
RothIndexSets s_sets(const RothParams& params, const Limits& limits = Limits{});

/// H rows over S and G rows over S̄; columns are (i, j) with j fastest, entries in ext.
struct ConstructionMatrices {
    RothIndexSets sets;
    Matrix h;
    Matrix g;
    FieldBasis alpha_dual, beta_dual;
};
ConstructionMatrices build_matrices(const RothParams& params, const Limits& limits = Limits{});

/// Span of the omega-expansions of xi * (rows of G), xi over the polynomial basis.
TensorCode roth_code(const RothParams& params, const Limits& limits = Limits{});
/// All X with sum_{i,j,t} X_ijt alpha_i^{p^l} beta_j^{p^s} omega_t = 0 for (l, s) in S.
TensorCode roth_code_kernel(const RothParams& params, const Limits& limits = Limits{});

/// One extension-field syndrome entry per H row; all zero for codewords.
Vec roth_syndrome(const RothParams& params, const ConstructionMatrices& m, const Tensor& x);

} // namespace tencode
