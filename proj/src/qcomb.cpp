#include "tencode/qcomb.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tencode {

namespace {

void require_prime_power(std::int64_t q) {
    if (!is_prime_power(q))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

Integer ipow(std::int64_t q, std::int64_t e) {
    Integer r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= q;
    return r;
}

} // namespace

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    std::int64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true; // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

Rational qpow(std::int64_t q, std::int64_t e) {
    if (e >= 0) return Rational(ipow(q, e));
    return Rational(Integer(1), ipow(q, -e));
}

Integer qbinom_count(std::int64_t q, std::int64_t a, std::int64_t b) {
    require_prime_power(q);
    if (a < 0) throw std::invalid_argument("qbinom_count needs a >= 0");
    if (b < 0 || b > a) return 0;
    Integer num = 1, den = 1;
    for (std::int64_t i = 0; i < b; ++i) {
        num *= ipow(q, a - i) - 1;
        den *= ipow(q, i + 1) - 1;
    }
    return num / den;
}

Rational qbinom(std::int64_t q, std::int64_t a, std::int64_t b) {
    require_prime_power(q);
    if (b < 0) return 0;
    if (a >= 0) return Rational(qbinom_count(q, a, b));
    if (b == 0) return 1;
    // a < 0 < b
    Rational r = qbinom(q, -a + b - 1, b) * qpow(q, a * b - b * (b - 1) / 2);
    return (b % 2) ? Rational(-r) : r;
}

Integer subspace_mobius(std::int64_t q, std::int64_t a, std::int64_t b) {
    require_prime_power(q);
    if (a > b) return 0;
    std::int64_t d = b - a;
    Integer r = ipow(q, d * (d - 1) / 2);
    return (d % 2) ? Integer(-r) : r;
}

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
    const std::size_t n = leq_.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (leq_[x].size() != n) throw std::invalid_argument("poset relation is not square");
        if (!leq_[x][x]) throw std::invalid_argument("poset relation is not reflexive");
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (leq_[x][y] && leq_[y][x])
                throw std::invalid_argument("poset relation is not antisymmetric");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!leq_[x][y]) continue;
            for (std::size_t z = 0; z < n; ++z)
                if (leq_[y][z] && !leq_[x][z])
                    throw std::invalid_argument("poset relation is not transitive");
        }
    // sort by number of elements below
    std::vector<std::size_t> below(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) below[y] += leq_[x][y];
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
}

MobiusTable::MobiusTable(const FinitePoset& poset) : n_(poset.size()), mu_(n_ * n_) {
    const auto& ord = poset.linear_extension();
    for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t iy = 0; iy < n_; ++iy) {
            std::size_t y = ord[iy];
            if (!poset.leq(x, y)) continue;
            if (x == y) {
                mu_[x * n_ + y] = 1;
                continue;
            }
            Integer s = 0;
            for (std::size_t iz = 0; iz < iy; ++iz) {
                std::size_t z = ord[iz];
                if (poset.leq(x, z) && poset.leq(z, y)) s += mu_[x * n_ + z];
            }
            mu_[x * n_ + y] = -s;
        }
    }
}

FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t a = p.size(), b = q.size();
    std::vector<std::vector<bool>> leq(a * b, std::vector<bool>(a * b));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t k = 0; k < a; ++k)
                for (std::size_t l = 0; l < b; ++l)
                    leq[i * b + j][k * b + l] = p.leq(i, k) && q.leq(j, l);
    return FinitePoset(std::move(leq));
}

std::vector<Rational> zeta_transform(const FinitePoset& poset, const std::vector<Rational>& f) {
    if (f.size() != poset.size()) throw std::invalid_argument("table size does not match poset");
    std::vector<Rational> g(f.size(), 0);
    for (std::size_t y = 0; y < f.size(); ++y)
        for (std::size_t x = 0; x < f.size(); ++x)
            if (poset.leq(x, y)) g[y] += f[x];
    return g;
}

std::vector<Rational> mobius_invert(const FinitePoset& poset, const MobiusTable& mu,
                                    const std::vector<Rational>& g) {
    if (g.size() != poset.size() || mu.size() != poset.size())
        throw std::invalid_argument("table size does not match poset");
    std::vector<Rational> f(g.size(), 0);
    for (std::size_t y = 0; y < g.size(); ++y)
        for (std::size_t x = 0; x < g.size(); ++x)
            if (poset.leq(x, y)) f[y] += Rational(mu(x, y)) * g[x];
    return f;
}

} // namespace tencode
