#include "tencode/moments.hpp"

#include <stdexcept>

#include "tencode/invariants.hpp"

namespace tencode {

namespace {

std::int64_t s64(std::size_t v) { return static_cast<std::int64_t>(v); }

void for_each_subcode(const TensorCode& c, std::size_t j, const Limits& limits,
                      const std::function<void(const TensorCode&)>& fn) {
    Integer count = qbinom_count(c.field()->q(), s64(c.dim()), s64(j));
    if (count > limits.objects) throw BudgetExceeded("enumerating " + count.str() + " subcodes exceeds the object budget");
    const auto& basis = c.space().basis();
    for_each_subspace(c.field(), c.dim(), j, [&](const Subspace& coef) {
        Matrix gens;
        for (const auto& row : coef.basis()) {
            Vec v(c.length(), 0);
            for (std::size_t i = 0; i < row.size(); ++i) vec_axpy(*c.field(), v, row[i], basis[i]);
            gens.push_back(std::move(v));
        }
        fn(TensorCode(c.dims(), Subspace(c.field(), c.length(), gens)));
    });
}

} // namespace

IntTable binomial_moments(const TensorCode& c, Family fam, const Limits& limits, std::optional<std::size_t> max_j) {
    const std::size_t n = c.length(), jmax = max_j.value_or(c.dim());
    const auto q = c.field()->q();
    IntTable b(n + 1, std::vector<Integer>(jmax + 1, 0));
    for (const auto& a : enumerate_family(fam, c.field(), c.dims(), limits)) {
        const std::size_t x = intersection_dim(c, a);
        auto& row = b[a.dim()];
        for (std::size_t j = 0; j <= std::min(jmax, x); ++j) row[j] += qbinom_count(q, s64(x), s64(j));
    }
    return b;
}

FamilyLattice build_family_lattice(Family fam, const FieldPtr& f, const Dims& dims, const Limits& limits) {
    auto members = enumerate_family(fam, f, dims, limits);
    const std::size_t m = members.size();
    if (double(m) * double(m) > double(limits.objects))
        throw BudgetExceeded("family lattice with " + std::to_string(m) + " members exceeds the object budget");
    std::vector<Subspace> spaces;
    std::vector<std::size_t> dim;
    for (const auto& a : members) {
        spaces.push_back(a.space());
        dim.push_back(spaces.back().dim());
    }
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            leq[x][y] = x == y || (dim[x] < dim[y] && spaces[y].contains(spaces[x]));
    FinitePoset order(std::move(leq));
    MobiusTable mu(order);
    return FamilyLattice{fam, f, dims, std::move(members), std::move(spaces), std::move(dim), std::move(order), std::move(mu)};
}

IntTable interval_counts(const FamilyLattice& lat) {
    const std::size_t n = dims_size(lat.dims);
    IntTable out(n + 1, std::vector<Integer>(n + 1, 0));
    for (std::size_t x = 0; x < lat.members.size(); ++x)
        for (std::size_t y = 0; y < lat.members.size(); ++y)
            if (lat.order.leq(x, y)) out[lat.dim[x]][lat.dim[y]] += 1;
    return out;
}

MemberTable member_moments(const TensorCode& c, const FamilyLattice& lat) {
    const auto q = c.field()->q();
    MemberTable out;
    for (const auto& a : lat.members) {
        const std::size_t x = intersection_dim(c, a);
        std::vector<Rational> row;
        for (std::size_t j = 0; j <= c.dim(); ++j) row.emplace_back(qbinom_count(q, s64(x), s64(j)));
        out.push_back(std::move(row));
    }
    return out;
}

MemberTable member_weights(const TensorCode& c, const FamilyLattice& lat, const Limits& limits,
                           std::vector<Integer>* orphans) {
    const std::size_t m = lat.members.size(), k = c.dim();
    MemberTable w(m, std::vector<Rational>(k + 1, 0));
    if (orphans) orphans->assign(k + 1, 0);
    // the zero subcode sits under the bottom element
    w[0][0] = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        for_each_subcode(c, j, limits, [&](const TensorCode& d) {
            std::vector<std::size_t> over;
            for (std::size_t i = 0; i < m; ++i)
                if (lat.dim[i] >= j && intersection_dim(d, lat.members[i]) == j) over.push_back(i);
            std::size_t least = over.front();
            for (auto i : over)
                if (lat.dim[i] < lat.dim[least]) least = i;
            for (auto i : over)
                if (!lat.order.leq(least, i)) {
                    if (orphans) (*orphans)[j] += 1;
                    return;
                }
            w[least][j] += 1;
        });
    }
    return w;
}

MemberTable bw_transform(const FamilyLattice& lat, const MemberTable& t, Direction dir) {
    const std::size_t m = lat.members.size();
    if (t.size() != m) throw std::invalid_argument("table does not match the family lattice");
    const std::size_t cols = m ? t[0].size() : 0;
    MemberTable out(m, std::vector<Rational>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Rational> col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = t[i][j];
        auto res = dir == Direction::WeightsToMoments ? zeta_transform(lat.order, col) : mobius_invert(lat.order, lat.mu, col);
        for (std::size_t i = 0; i < m; ++i) out[i][j] = res[i];
    }
    return out;
}

RatTable aggregate(const FamilyLattice& lat, const MemberTable& t) {
    const std::size_t n = dims_size(lat.dims);
    const std::size_t cols = t.empty() ? 0 : t[0].size();
    RatTable out(n + 1, std::vector<Rational>(cols, 0));
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out[lat.dim[i]][j] += t[i][j];
    return out;
}

RatTable weight_distribution(const TensorCode& c, Family fam, const Limits& limits) {
    auto lat = build_family_lattice(fam, c.field(), c.dims(), limits);
    return aggregate(lat, member_weights(c, lat, limits));
}

MacWilliamsReport macwilliams_check(const TensorCode& c, Family fam, const Limits& limits) {
    const std::size_t n = c.length(), k = c.dim();
    const std::int64_t q = c.field()->q();
    MacWilliamsReport r;
    r.code_moments = binomial_moments(c, fam, limits);
    TensorCode d = c.dual();
    r.dual_moments = binomial_moments(d, dual_family(fam), limits, k);
    for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t j = 0; j <= k; ++j) {
            const std::int64_t base = s64(k) + s64(a) - s64(n);
            Rational rhs = 0;
            for (std::size_t p = 0; p <= j; ++p) {
                const std::int64_t jp = s64(j) - s64(p), pp = s64(p);
                rhs += qpow(q, pp * (base - s64(j) + pp)) * qbinom(q, base, jp) * Rational(r.dual_moments[n - a][p]);
            }
            ++r.cells;
            if (Rational(r.code_moments[a][j]) != rhs && r.holds) {
                r.holds = false;
                r.bad_a = a;
                r.bad_j = j;
                r.lhs = Rational(r.code_moments[a][j]);
                r.rhs = rhs;
            }
        }
    }
    return r;
}

std::size_t dual_intersection_violations(const TensorCode& c, Family fam, const Limits& limits) {
    const std::int64_t n = s64(c.length()), k = s64(c.dim());
    TensorCode d = c.dual();
    std::size_t bad = 0;
    for (const auto& a : enumerate_family(fam, c.field(), c.dims(), limits)) {
        std::int64_t lhs = s64(intersection_dim(c, a));
        std::int64_t rhs = s64(intersection_dim(d, dual(a))) + k + s64(a.dim()) - n;
        bad += lhs != rhs;
    }
    return bad;
}

std::vector<std::string> moment_case_violations(const TensorCode& c, Family fam, const IntTable& b, const Limits& limits) {
    std::vector<std::string> out;
    const std::size_t n = c.length(), k = c.dim();
    const std::int64_t q = c.field()->q();
    if (k == 0) return out;
    auto t = profile_by_enumeration(c, fam, limits);
    TensorCode d = c.dual();
    std::optional<std::size_t> s1;
    if (d.dim() > 0) s1 = profile_by_enumeration(d, dual_family(fam), limits).front();
    for (std::size_t j = 1; j <= k && j < b[0].size(); ++j) {
        for (std::size_t a = 0; a <= n; ++a) {
            const std::string cell = "B_" + std::to_string(a) + "^(" + std::to_string(j) + ")";
            if (a < t[j - 1] && b[a][j] != 0) out.push_back(cell + " should vanish");
            if (!s1 || a + *s1 > n) {
                Rational expect = qbinom(q, s64(k) + s64(a) - s64(n), s64(j)) * Rational(b[a][0]);
                if (Rational(b[a][j]) != expect) out.push_back(cell + " differs from the tail formula");
            }
        }
    }
    return out;
}

} // namespace tencode
