#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tencode {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// True iff q = p^m for a prime p and m >= 1.
bool is_prime_power(std::int64_t q);

/// Exact q^e for e >= 0, or 1/q^{-e} for e < 0.
Rational qpow(std::int64_t q, std::int64_t e);

/**
 * @brief Gaussian binomial coefficient extended to all integers a, b.
 *
 * Zero for b < 0 or 0 <= a < b, one for b = 0 and a >= 0, the usual product
 * for a >= b > 0, and the reflection (-1)^b q^{ab - C(b,2)} qbinom(-a+b-1, b)
 * for a < 0 < b.  The last case can be a proper fraction.
 */
Rational qbinom(std::int64_t q, std::int64_t a, std::int64_t b);

/// qbinom for 0 <= b, 0 <= a, returned as an integer (number of b-subspaces of F_q^a).
Integer qbinom_count(std::int64_t q, std::int64_t a, std::int64_t b);

/// Moebius function of the subspace lattice between dimensions a <= b.
Integer subspace_mobius(std::int64_t q, std::int64_t a, std::int64_t b);

/**
 * @brief Finite poset stored as a dense order relation.
 *
 * The constructor checks reflexivity, antisymmetry and transitivity.
 */
class FinitePoset {
public:
    explicit FinitePoset(std::vector<std::vector<bool>> leq);

    std::size_t size() const { return leq_.size(); }
    bool leq(std::size_t x, std::size_t y) const { return leq_[x][y]; }

    /// Elements sorted so that x <= y implies x comes first.
    const std::vector<std::size_t>& linear_extension() const { return order_; }

private:
    std::vector<std::vector<bool>> leq_;
    std::vector<std::size_t> order_;
};

/// Dense Moebius table: mu(x, y), zero when x is not below y.
class MobiusTable {
public:
    explicit MobiusTable(const FinitePoset& poset);

    const Integer& operator()(std::size_t x, std::size_t y) const { return mu_[x * n_ + y]; }
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    std::vector<Integer> mu_;
};

/// Product of two posets, ordered componentwise; element (i, j) has index i * |Q| + j.
FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q);

/// g(y) = sum_{x <= y} f(x).
std::vector<Rational> zeta_transform(const FinitePoset& poset, const std::vector<Rational>& f);

/// Inverse of zeta_transform: f(y) = sum_{x <= y} mu(x, y) g(x).
std::vector<Rational> mobius_invert(const FinitePoset& poset, const MobiusTable& mu,
                                    const std::vector<Rational>& g);

} // namespace tencode
