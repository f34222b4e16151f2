#include "tencode/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tencode {

namespace {

void check_j(const TensorCode& c, std::size_t j) {
    if (j < 1 || j > c.dim())
        throw std::invalid_argument("weight index j = " + std::to_string(j) + " outside [1, " + std::to_string(c.dim()) + "]");
}

// Calls fn with each j-dimensional subcode.
void for_each_subcode(const TensorCode& c, std::size_t j, const Limits& limits,
                      const std::function<void(const TensorCode&)>& fn) {
    Integer count = qbinom_count(c.field()->q(), std::int64_t(c.dim()), std::int64_t(j));
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

std::size_t perfect_weight(const TensorCode& c, std::size_t j, const Limits& limits) {
    if (j == 1) return min_distance(c, limits);
    std::vector<std::pair<std::size_t, Tensor>> cands;
    for_each_subcode(c, j, limits, [&](const TensorCode& d) {
        Tensor s = d.stacked();
        cands.emplace_back(rank_lower_bound(s), s);
    });
    std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t best = SIZE_MAX;
    for (const auto& [lb, s] : cands) {
        if (lb >= best) break;
        std::optional<std::size_t> cap;
        if (best != SIZE_MAX) cap = best - 1;
        if (auto r = tensor_rank(s, limits, cap)) best = r->rank;
    }
    return best;
}

Family dual_weight_family(Family fam) {
    if (fam == Family::Perfect) throw std::invalid_argument("the perfect family has no dual weights");
    if (fam == Family::Delsarte || fam == Family::Ravagnani) return fam;
    return dual_family(fam);
}

} // namespace

std::vector<std::size_t> profile_by_enumeration(const TensorCode& c, Family fam, const Limits& limits) {
    std::vector<std::size_t> t(c.dim(), SIZE_MAX);
    if (c.dim() == 0) return t;
    std::size_t unset = c.dim();
    for (const auto& a : enumerate_family(fam, c.field(), c.dims(), limits)) {
        std::size_t x = intersection_dim(c, a);
        for (std::size_t j = 1; j <= x; ++j)
            if (t[j - 1] == SIZE_MAX) {
                t[j - 1] = a.dim();
                --unset;
            }
        if (unset == 0) break;
    }
    return t;
}

std::size_t closure_weight_by_subcodes(const TensorCode& c, std::size_t j, const Limits& limits) {
    check_j(c, j);
    std::size_t best = SIZE_MAX;
    for_each_subcode(c, j, limits, [&](const TensorCode& d) {
        std::size_t dim = 1;
        for (const auto& s : d.closure()) dim *= s.dim();
        best = std::min(best, dim);
    });
    return best;
}

std::size_t generalized_weight(const TensorCode& c, Family fam, std::size_t j, const Limits& limits) {
    check_j(c, j);
    if (fam == Family::Perfect) return perfect_weight(c, j, limits);
    if (fam == Family::ClosureType) {
        Integer subcodes = qbinom_count(c.field()->q(), std::int64_t(c.dim()), std::int64_t(j));
        if (subcodes < family_size(fam, c.field(), c.dims())) return closure_weight_by_subcodes(c, j, limits);
    }
    return profile_by_enumeration(c, fam, limits)[j - 1];
}

std::vector<std::size_t> weight_profile(const TensorCode& c, Family fam, const Limits& limits) {
    std::vector<std::size_t> t;
    if (fam == Family::Perfect) {
        for (std::size_t j = 1; j <= c.dim(); ++j) t.push_back(perfect_weight(c, j, limits));
    } else if (fam == Family::ClosureType && family_size(fam, c.field(), c.dims()) > limits.objects) {
        for (std::size_t j = 1; j <= c.dim(); ++j) t.push_back(closure_weight_by_subcodes(c, j, limits));
    } else {
        t = profile_by_enumeration(c, fam, limits);
    }
    auto bad = profile_violations(c, fam, t);
    if (!bad.empty()) throw std::logic_error("inconsistent " + family_name(fam) + " profile: " + bad.front());
    return t;
}

std::vector<std::size_t> dual_weight_profile(const TensorCode& c, Family fam, const Limits& limits) {
    Family d = dual_weight_family(fam);
    auto s = profile_by_enumeration(c, d, limits);
    auto bad = profile_violations(c, d, s);
    if (!bad.empty()) throw std::logic_error("inconsistent dual " + family_name(fam) + " profile: " + bad.front());
    return s;
}

std::size_t generalized_dual_weight(const TensorCode& c, Family fam, std::size_t j, const Limits& limits) {
    check_j(c, j);
    return profile_by_enumeration(c, dual_weight_family(fam), limits)[j - 1];
}

std::vector<std::string> profile_violations(const TensorCode& c, Family fam, const std::vector<std::size_t>& t) {
    std::vector<std::string> out;
    const std::size_t n = c.length();
    for (std::size_t j = 1; j <= t.size(); ++j) {
        const std::size_t v = t[j - 1];
        const std::string at = "t_" + std::to_string(j) + " = " + std::to_string(v);
        if (v < j || v > n) out.push_back(at + " outside [j, n]");
        if (j > 1) {
            if (v < t[j - 2]) out.push_back(at + " decreases");
            if (fam == Family::Perfect && v == t[j - 2]) out.push_back(at + " is not strictly increasing");
        }
        if (fam == Family::Ravagnani) {
            std::size_t g = n / *std::min_element(c.dims().begin(), c.dims().end());
            if (v % g) out.push_back(at + " is not a multiple of " + std::to_string(g));
        }
    }
    if (fam == Family::ClosureType && !t.empty()) {
        std::size_t cl = 1;
        for (const auto& s : c.closure()) cl *= s.dim();
        if (t.back() != cl) out.push_back("t_k differs from dim cl(C) = " + std::to_string(cl));
    }
    return out;
}

TbmdReport tbmd_classify(const TensorCode& c, Family fam, const Limits& limits) {
    if (fam == Family::Perfect) throw std::invalid_argument("TBMD is not defined for the perfect family");
    TbmdReport r{fam, weight_profile(c, fam, limits), std::nullopt, {}, std::nullopt};
    TensorCode dual = c.dual();
    if (dual.dim() > 0) r.dual_s1 = profile_by_enumeration(dual, dual_family(fam), limits).front();
    const std::size_t n = c.length();
    for (std::size_t j = 1; j <= r.t.size(); ++j) {
        bool yes = !r.dual_s1 || n < *r.dual_s1 + r.t[j - 1];
        r.tbmd.push_back(yes);
        if (yes && !r.minimal_j) r.minimal_j = j;
    }
    return r;
}

bool is_jbmd_r2(const TensorCode& c, std::size_t j, const Limits& limits) {
    if (c.dims().size() != 2) throw std::invalid_argument("j-BMD is defined for matrix codes (r = 2)");
    check_j(c, j);
    if (c.dim() == c.length()) throw std::invalid_argument("j-BMD needs a proper code");
    const std::size_t n1 = std::min(c.dims()[0], c.dims()[1]);
    const std::size_t n2 = std::max(c.dims()[0], c.dims()[1]);
    std::size_t dj = weight_profile(c, Family::Delsarte, limits)[j - 1] / n2;
    std::size_t dperp = min_distance(c.dual(), limits);
    return n1 < dj + dperp;
}

std::vector<WeiSets> wei_duality(const TensorCode& c, const Limits& limits) {
    const std::size_t n = c.length(), k = c.dim();
    if (k == 0 || k == n) throw std::invalid_argument("Wei duality needs 1 <= dim C <= n - 1");
    const std::size_t n1 = *std::min_element(c.dims().begin(), c.dims().end());
    const std::size_t g = n / n1;
    auto t = weight_profile(c, Family::Ravagnani, limits);
    auto td = weight_profile(c.dual(), Family::Ravagnani, limits);
    std::vector<WeiSets> out;
    for (std::size_t p = 1; p <= g; ++p) {
        WeiSets w{p, {}, {}, false};
        for (std::size_t i = p; i <= n - k; i += g) w.dual_side.insert(td[i - 1] / g);
        for (std::size_t i = (p + k - 1) % g + 1; i <= k; i += g) w.code_side.insert(n1 + 1 - t[i - 1] / g);
        std::set<std::size_t> all = w.dual_side;
        all.insert(w.code_side.begin(), w.code_side.end());
        w.partition = all.size() == n1 && w.dual_side.size() + w.code_side.size() == n1 && *all.begin() == 1 &&
                      *all.rbegin() == n1;
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace tencode
