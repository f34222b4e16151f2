#pragma once

#include <string>
#include <vector>

#include "tencode/anticode.hpp"
#include "tencode/code.hpp"
#include "tencode/roth.hpp"

namespace tencode {

/**
 * Slice display format for order 2 and 3 tensors.
 *
 * Rows (first index) are separated by ';'.  For order 3, each row lists the
 * slices (last index) separated by '|', and each slice lists n_2 entries.
 * Entries are whitespace separated, or single digits when a group has no spaces.
 * Example (2x2x2): "1 0|1 1 ; 0 1|1 0".
 */
Tensor parse_display(const FieldPtr& f, const Dims& dims, const std::string& text);
std::string format_display(const Tensor& x);
/// "1,0,2" or "102".
Vec parse_vec(const FieldPtr& f, const std::string& text);
Subspace span_of(const FieldPtr& f, std::size_t n, const std::vector<std::string>& rows);

/// alpha^e for the class alpha of x.
Elem alpha_power(const Field& f, int e);

namespace fixtures {

struct ClosureExample {
    FieldPtr field;
    Dims dims;
    Tensor x, y, z;
    TensorCode code;
    std::vector<std::vector<Subspace>> closures;   ///< cl(X), cl(Y), cl(Z)
    std::vector<std::vector<Vec>> x_fibers;       ///< distinct mode fibers of X, as listed
    std::vector<std::size_t> t_cl;                ///< (4, 18, 24)
    Subspace t2_third_factor;                     ///< third factor of cl(<X, Y>)
};
ClosureExample closure_example();

struct GabidulinExample {
    FieldPtr field;
    Dims dims;
    TensorCode c, d;
};
GabidulinExample gabidulin_example();

/// A perfect space whose dual is spanned by a single rank-2 matrix.
struct DualPerfectExample {
    FieldPtr field;
    Dims dims;
    Subspace a;
    Subspace a_dual;
};
DualPerfectExample dual_perfect_example();

/// Two dual closure-type anticodes whose perfect-space meet is not a dual closure-type anticode.
struct NonSublatticeExample {
    FieldPtr field;
    Dims dims;
    Anticode a, b;
    Subspace ps_meet;
};
NonSublatticeExample non_sublattice_example();

/// M = e1 (x) e1 and the antidiagonal N over GF(2).
struct IncomparableExample {
    FieldPtr field;
    Dims dims;
    Tensor m, n;
    std::vector<Subspace> m_cl;
    Anticode m_dual_cl;
    Anticode n_dual_cl;
};
IncomparableExample incomparable_example();

/// X = e1 (x) e2 + e2 (x) e1 over GF(3).
struct SymmetricExample {
    FieldPtr field;
    Dims dims;
    Tensor x;
    Anticode witness;
};
SymmetricExample symmetric_example();

struct RothExample {
    RothParams params;
    RothIndexSets sets;
    std::vector<std::vector<int>> h_exp, g_exp;  ///< entries as powers of alpha
    std::vector<int> dual_exp;                   ///< dual basis as powers of alpha
    std::vector<Tensor> generators;
};
RothExample roth_small();  ///< C(2,3,3;2)
RothExample roth_large();  ///< C(3,4,3;2)

} // namespace fixtures
} // namespace tencode
