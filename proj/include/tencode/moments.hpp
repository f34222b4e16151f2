#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tencode/anticode.hpp"
#include "tencode/qcomb.hpp"

namespace tencode {

/// table[a][j], 0 <= a <= n, 0 <= j <= max_j.
using IntTable = std::vector<std::vector<Integer>>;
using RatTable = std::vector<std::vector<Rational>>;

/// B_a^{(j)} = sum over dimension-a family members A of qbinom(dim(C ∩ A), j).
/// Column j = 0 counts the members of each dimension.
IntTable binomial_moments(const TensorCode& c, Family fam, const Limits& limits = Limits{},
                          std::optional<std::size_t> max_j = std::nullopt);

/// A family together with its inclusion order and Moebius function.
struct FamilyLattice {
    Family family;
    FieldPtr field;
    Dims dims;
    std::vector<Anticode> members;   ///< sorted by dimension
    std::vector<Subspace> spaces;
    std::vector<std::size_t> dim;
    FinitePoset order;
    MobiusTable mu;
};
FamilyLattice build_family_lattice(Family fam, const FieldPtr& f, const Dims& dims, const Limits& limits = Limits{});

/// N[b][a] = |{(A', A) : dim A' = b, dim A = a, A' <= A}|.
IntTable interval_counts(const FamilyLattice& lat);

/// Per-member tables, indexed [member][j].
using MemberTable = std::vector<std::vector<Rational>>;

/// qbinom(dim(C ∩ A), j) per member, j = 0..k.
MemberTable member_moments(const TensorCode& c, const FamilyLattice& lat);

/**
 * @brief Direct weight distribution per member.
 *
 * W_A^{(j)} counts the j-dimensional subcodes D whose least containing family
 * member is A.  Subcodes with no least containing member are not counted and
 * are reported through `orphans` (per j).
 */
MemberTable member_weights(const TensorCode& c, const FamilyLattice& lat, const Limits& limits = Limits{},
                           std::vector<Integer>* orphans = nullptr);

enum class Direction { WeightsToMoments, MomentsToWeights };
/// Zeta (W -> B: B_A = sum_{A' <= A} W_A') or Moebius (B -> W) transform over the family order.
MemberTable bw_transform(const FamilyLattice& lat, const MemberTable& t, Direction dir);

/// Sums per-member rows over members of each dimension: result[a][j].
RatTable aggregate(const FamilyLattice& lat, const MemberTable& t);

/// Direct weight distribution aggregated by dimension.
RatTable weight_distribution(const TensorCode& c, Family fam, const Limits& limits = Limits{});

struct MacWilliamsReport {
    bool holds = true;
    std::size_t cells = 0;
    std::optional<std::size_t> bad_a, bad_j;
    Rational lhs, rhs;
    IntTable code_moments, dual_moments;
};

/// Checks B_a^{(j)}(C) = sum_p q^{p(k+a-n-j+p)} qbinom(k+a-n, j-p) B̄_{n-a}^{(p)}(C^⊥) for all a, j.
MacWilliamsReport macwilliams_check(const TensorCode& c, Family fam, const Limits& limits = Limits{});

/// Pairs (C, A) violating dim(C ∩ A) = dim(C^⊥ ∩ A^⊥) + k + dim A - n; returns how many.
std::size_t dual_intersection_violations(const TensorCode& c, Family fam, const Limits& limits = Limits{});

/// Checks the vanishing (a < t_j) and tail (a > n - s_1(C^⊥)) cases of a moment table.
std::vector<std::string> moment_case_violations(const TensorCode& c, Family fam, const IntTable& b,
                                                const Limits& limits = Limits{});

} // namespace tencode
