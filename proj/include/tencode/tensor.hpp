#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tencode/gfq.hpp"
#include "tencode/limits.hpp"
#include "tencode/subspace.hpp"

namespace tencode {

using Dims = std::vector<std::size_t>;

std::size_t dims_size(const Dims& dims);
void check_dims(const Dims& dims);

/**
 * @brief Element of F^{n_1} x ... x F^{n_r}, stored flat with the last index fastest.
 *
 * Indices are 0-based in the API.  The entry with index (j_1, ..., j_r) sits at
 * offset sum_i j_i * prod_{t > i} n_t.
 */
class Tensor {
public:
    Tensor(FieldPtr f, Dims dims, Vec entries);
    static Tensor zeros(FieldPtr f, Dims dims);
    /// u_1 (x) ... (x) u_r
    static Tensor outer(FieldPtr f, const std::vector<Vec>& factors);

    const FieldPtr& field() const { return f_; }
    const Dims& dims() const { return dims_; }
    std::size_t order() const { return dims_.size(); }
    std::size_t size() const { return entries_.size(); }
    const Vec& entries() const { return entries_; }

    std::size_t offset(const std::vector<std::size_t>& idx) const;
    Elem at(const std::vector<std::size_t>& idx) const { return entries_[offset(idx)]; }
    void set(const std::vector<std::size_t>& idx, Elem v) { entries_[offset(idx)] = v; }

    /**
     * Mode-i fiber with the free index at position i and s_1, s_2, ... placed
     * cyclically at positions i+1, i+2, ... (wrapping around).
     */
    Vec fiber(std::size_t mode, const std::vector<std::size_t>& s) const;
    /// All mode-i fibers, one per choice of s, with repetitions.
    std::vector<Vec> fibers(std::size_t mode) const;
    Subspace fiber_span(std::size_t mode) const;
    /// (fiber_span(0), ..., fiber_span(r-1)).
    std::vector<Subspace> closure() const;
    std::size_t flattening_rank(std::size_t mode) const { return fiber_span(mode).dim(); }

    /// Slices X_{..., t, ...} for t in [n_mode], each flattened over the other modes in order.
    std::vector<Vec> slices(std::size_t mode) const;

    bool is_zero() const;
    /// True iff X is a nonzero simple tensor.
    bool is_rank_one() const;

    Tensor operator+(const Tensor& o) const;
    Tensor scaled(Elem c) const;
    bool operator==(const Tensor& o) const;

private:
    void check(const Tensor& o) const;
    FieldPtr f_;
    Dims dims_;
    Vec entries_;
};

/// sum of entrywise products
Elem star(const Tensor& a, const Tensor& b);

/// Flat-vector kernels shared by the code and anticode modules.
namespace kernel {
/// y = x contracted with h along the given mode; length size/dims[mode].
Vec contract(const Field& f, const Dims& dims, const Vec& x, std::size_t mode, const Vec& h);
/// Span of the mode-i fibers of each vector in xs.
Subspace fiber_span(const FieldPtr& f, const Dims& dims, const std::vector<Vec>& xs, std::size_t mode);
bool is_rank_one(const Field& f, const Dims& dims, const Vec& x);
/// Tensor product of a family of factor subspaces, as a subspace of the flat space.
Subspace product_space(const FieldPtr& f, const Dims& dims, const std::vector<Subspace>& parts);
/// F ⊗ .. ⊗ E ⊗ .. ⊗ F with E at the given mode.
Subspace single_mode_space(const FieldPtr& f, const Dims& dims, std::size_t mode, const Subspace& e);
/// The largest E with single_mode_space(mode, E) contained in V.
Subspace largest_single_mode(const FieldPtr& f, const Dims& dims, const Subspace& v, std::size_t mode);
/// Every projective rank-one tensor of the given shape together with its factors.
struct RankOne {
    Vec flat;
    std::vector<Vec> factors;
};
std::vector<RankOne> projective_rank_one(const Field& f, const Dims& dims, const Limits& limits);
} // namespace kernel

/// Rank-one terms X = sum_s factors_s[0] (x) ... (x) factors_s[r-1].
using Decomposition = std::vector<std::vector<Vec>>;

struct RankResult {
    std::size_t rank;
    Decomposition witness;
};

/**
 * @brief Exact tensor rank by iterative deepening.
 *
 * Returns std::nullopt if the rank exceeds cap.  Throws BudgetExceeded
 * (carrying the proven lower bound) when the node budget runs out.
 */
std::optional<RankResult> tensor_rank(const Tensor& x, const Limits& limits = Limits{},
                                      std::optional<std::size_t> cap = std::nullopt);

/// Largest flattening rank, a lower bound for tensor_rank.
std::size_t rank_lower_bound(const Tensor& x);

/**
 * @brief Smallest subspace P containing S that is spanned by rank-one tensors.
 *
 * Returns dim P and a basis of P made of rank-one tensors (flat vectors with
 * factors), or std::nullopt if dim P would exceed cap.
 */
struct PerfectHull {
    std::size_t dim;
    std::vector<kernel::RankOne> basis;
};
std::optional<PerfectHull> perfect_hull(const FieldPtr& f, const Dims& dims, const Subspace& s,
                                        const Limits& limits = Limits{},
                                        std::optional<std::size_t> cap = std::nullopt,
                                        std::size_t lower = 0);

/// Solves v = sum_i c_i gens_i; std::nullopt if v is not in the span.
std::optional<Vec> express_in(const Field& f, const std::vector<Vec>& gens, const Vec& v);

} // namespace tencode
