#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tencode/code.hpp"
#include "tencode/qcomb.hpp"

namespace tencode {

enum class Family { Perfect, ClosureType, DualClosureType, Delsarte, Ravagnani };

std::string family_name(Family f);
/// Accepts "perfect", "cl", "dualcl", "delsarte", "ravagnani" and the long names.
Family parse_family(const std::string& s);
/// Family whose members are the orthogonal complements of this family's members.
Family dual_family(Family f);

/// Modes (0-based) that may carry the proper factor of a Delsarte or Ravagnani member.
std::vector<std::size_t> allowed_modes(Family f, const Dims& dims);

/**
 * @brief Member of one of the anticode families.
 *
 * Payload by family:
 *  - ClosureType: components A_i, space A_1 ⊗ ... ⊗ A_r (all zero if any is zero).
 *  - DualClosureType: components A_i, space sum_i F ⊗ .. ⊗ A_i ⊗ .. ⊗ F (all full if any is full).
 *  - Delsarte / Ravagnani: one component E at `mode`, space F ⊗ .. ⊗ E ⊗ .. ⊗ F.
 *  - Perfect: a basis of rank-one tensors.
 */
struct Anticode {
    Family family;
    FieldPtr field;
    Dims dims;
    std::vector<Subspace> components;
    std::size_t mode = 0;
    std::vector<Vec> generators;

    Subspace space() const;
    std::size_t dim() const;
    bool operator==(const Anticode& o) const;
};

Anticode make_closure_type(const FieldPtr& f, const Dims& dims, std::vector<Subspace> comps);
Anticode make_dual_closure_type(const FieldPtr& f, const Dims& dims, std::vector<Subspace> comps);
Anticode make_single_mode(Family fam, const FieldPtr& f, const Dims& dims, std::size_t mode, Subspace e);
Anticode make_zero(Family fam, const FieldPtr& f, const Dims& dims);
Anticode make_full(Family fam, const FieldPtr& f, const Dims& dims);

/// The family member whose space is V, if any.
std::optional<Anticode> as_member(const Subspace& v, Family fam, const Dims& dims,
                                  const Limits& limits = Limits{});
inline bool is_member(const Subspace& v, Family fam, const Dims& dims, const Limits& limits = Limits{}) {
    return as_member(v, fam, dims, limits).has_value();
}

/// All members of a family, ordered by dimension then payload.  Perfect is only
/// feasible on tiny spaces since it scans every subspace.
std::vector<Anticode> enumerate_family(Family fam, const FieldPtr& f, const Dims& dims,
                                       const Limits& limits = Limits{});
/// Number of members, computed without enumeration (not for Perfect).
Integer family_size(Family fam, const FieldPtr& f, const Dims& dims);

/// Lattice operations inside a family.
Anticode meet(const Anticode& a, const Anticode& b);
Anticode join(const Anticode& a, const Anticode& b);
/// A^⊥ as a member of dual_family(A.family).
Anticode dual(const Anticode& a);

/// dim(C ∩ A), using the structure of A to avoid building its space.
std::size_t intersection_dim(const TensorCode& c, const Anticode& a);

} // namespace tencode
