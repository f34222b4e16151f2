#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "tencode/gfq.hpp"
#include "tencode/limits.hpp"

namespace tencode {

using Matrix = std::vector<Vec>;

struct RrefResult {
    Matrix rows;                    ///< nonzero rows of the reduced echelon form
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; rows must all have length n.
RrefResult rref(const Field& f, Matrix m, std::size_t n);
std::size_t matrix_rank(const Field& f, Matrix m, std::size_t n);

/// Vector helpers.
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Elem c, const Vec& a);
/// a += c * b
void vec_axpy(const Field& f, Vec& a, Elem c, const Vec& b);
Elem dot(const Field& f, const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
/// Scales so the first nonzero entry is 1; zero vectors are returned unchanged.
Vec normalize(const Field& f, Vec v);

/**
 * @brief Subspace of F_q^n stored by its reduced row echelon basis.
 *
 * The RREF basis is canonical, so equality is equality of bases.
 */
class Subspace {
public:
    Subspace(FieldPtr f, std::size_t n, const Matrix& generators);

    static Subspace zero(FieldPtr f, std::size_t n);
    static Subspace full(FieldPtr f, std::size_t n);

    const FieldPtr& field() const { return f_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    /// Reduction of v modulo this subspace (zero iff v is contained).
    Vec reduce(Vec v) const;
    /// Coordinates of v in the RREF basis; throws if v is not contained.
    Vec coordinates(const Vec& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Orthogonal complement for the standard bilinear form.
    Subspace complement() const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    /// Lexicographic order on (dim, basis), used for deterministic output.
    bool operator<(const Subspace& o) const;

private:
    Subspace(FieldPtr f, std::size_t n, RrefResult r);
    void check(const Subspace& o) const;

    FieldPtr f_;
    std::size_t n_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space {x : M x = 0} for M with n columns, as rows of a basis.
Matrix null_space(const Field& f, const Matrix& m, std::size_t n);

/// Calls fn for every d-dimensional subspace of F_q^n in a deterministic order.
void for_each_subspace(const FieldPtr& f, std::size_t n, std::size_t d,
                       const std::function<void(const Subspace&)>& fn);
/// All d-dimensional subspaces, sorted lexicographically by RREF basis.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& f, std::size_t n, std::size_t d,
                                          const Limits& limits = Limits{});
/// All subspaces of every dimension 0..n.
std::vector<Subspace> enumerate_all_subspaces(const FieldPtr& f, std::size_t n,
                                              const Limits& limits = Limits{});

/// Calls fn for each nonzero vector of F_q^k whose first nonzero entry is 1.
void for_each_projective(const Field& f, std::size_t k, const std::function<void(const Vec&)>& fn);

} // namespace tencode
