#include <doctest.h>

#include <random>

#include "tencode/fixtures.hpp"
#include "tencode/invariants.hpp"
#include "oracle.hpp"

using namespace tencode;

namespace {

// dim(C ∩ A) by counting common vectors.
std::size_t brute_meet_dim(const TensorCode& c, const Subspace& a) {
    std::size_t common = 0;
    for (const auto& v : oracle::elements(c.space())) common += a.contains(v);
    std::size_t d = 0;
    while (common > 1) {
        common /= c.field()->q();
        ++d;
    }
    return d;
}

std::vector<std::size_t> brute_profile(const TensorCode& c, const std::vector<Subspace>& members) {
    std::vector<std::size_t> t(c.dim(), SIZE_MAX);
    for (const auto& a : members) {
        std::size_t x = brute_meet_dim(c, a);
        for (std::size_t j = 1; j <= x; ++j) t[j - 1] = std::min(t[j - 1], a.dim());
    }
    return t;
}

std::vector<Subspace> spaces(Family fam, const FieldPtr& f, const Dims& dims) {
    std::vector<Subspace> out;
    for (const auto& a : enumerate_family(fam, f, dims)) out.push_back(a.space());
    return out;
}

struct Case {
    int q;
    Dims dims;
};

} // namespace

TEST_CASE("weight profiles against brute force") {
    std::mt19937 rng(51);
    for (const auto& cs : {Case{2, {2, 2}}, Case{3, {2, 2}}, Case{2, {2, 3}}, Case{2, {2, 2, 2}}, Case{2, {3, 2}}}) {
        auto f = Field::of_order(cs.q);
        const std::size_t n = dims_size(cs.dims);
        std::vector<Family> fams{Family::ClosureType, Family::DualClosureType, Family::Delsarte, Family::Ravagnani};
        if (n <= 6) fams.push_back(Family::Perfect);
        for (Family fam : fams) {
            CAPTURE(family_name(fam));
            auto members = spaces(fam, f, cs.dims);
            for (int t = 0; t < 12; ++t) {
                TensorCode c(cs.dims, oracle::random_subspace_of_dim(f, n, 1 + t % (n - 1), rng));
                auto expect = brute_profile(c, members);
                CHECK(weight_profile(c, fam) == expect);
                CHECK(profile_by_enumeration(c, fam) == expect);
                CHECK(generalized_weight(c, fam, 1) == expect[0]);
                CHECK(profile_violations(c, fam, expect).empty());
                if (fam == Family::ClosureType)
                    for (std::size_t j = 1; j <= c.dim(); ++j) CHECK(closure_weight_by_subcodes(c, j) == expect[j - 1]);
                if (fam == Family::Perfect) CHECK(expect.back() == code_tensor_rank(c).rank);
                if (fam != Family::Perfect) {
                    Family d = (fam == Family::ClosureType || fam == Family::DualClosureType) ? dual_family(fam) : fam;
                    auto s = dual_weight_profile(c, fam);
                    CHECK(s == brute_profile(c, spaces(d, f, cs.dims)));
                    CHECK(generalized_dual_weight(c, fam, 1) == s[0]);
                }
            }
        }
    }
}

TEST_CASE("profile sanity checks catch bad profiles") {
    auto f = Field::of_order(2);
    TensorCode c({2, 2}, Subspace(f, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
    CHECK(weight_profile(c, Family::ClosureType) == std::vector<std::size_t>{1, 4});
    CHECK_FALSE(profile_violations(c, Family::ClosureType, {2, 2}).empty());
    CHECK_FALSE(profile_violations(c, Family::ClosureType, {0, 4}).empty());
    CHECK_FALSE(profile_violations(c, Family::ClosureType, {1, 5}).empty());
    CHECK_THROWS(generalized_weight(c, Family::ClosureType, 3));
    CHECK_THROWS(generalized_weight(c, Family::ClosureType, 0));
}

TEST_CASE("TBMD classification follows its definition") {
    std::mt19937 rng(52);
    auto f = Field::of_order(2);
    for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{2, 2, 2}}) {
        const std::size_t n = dims_size(dims);
        for (Family fam : {Family::ClosureType, Family::Delsarte, Family::Ravagnani, Family::DualClosureType}) {
            for (int t = 0; t < 10; ++t) {
                TensorCode c(dims, oracle::random_subspace_of_dim(f, n, 1 + t % (n - 1), rng));
                auto r = tbmd_classify(c, fam);
                auto tp = brute_profile(c, spaces(fam, f, dims));
                auto s1 = brute_profile(c.dual(), spaces(dual_family(fam), f, dims)).front();
                CHECK(r.t == tp);
                CHECK(*r.dual_s1 == s1);
                for (std::size_t j = 1; j <= c.dim(); ++j) CHECK(r.tbmd[j - 1] == (n < s1 + tp[j - 1]));
                // TBMD is monotone in j
                for (std::size_t j = 1; j < c.dim(); ++j)
                    if (r.tbmd[j - 1]) CHECK(r.tbmd[j]);
            }
        }
    }
    // the full space: no dual, every j qualifies
    TensorCode full({2, 2}, Subspace::full(f, 4));
    auto r = tbmd_classify(full, Family::ClosureType);
    CHECK_FALSE(r.dual_s1.has_value());
    CHECK(*r.minimal_j == 1);
    CHECK_THROWS(tbmd_classify(full, Family::Perfect));
}

TEST_CASE("matrix j-BMD") {
    std::mt19937 rng(53);
    auto f = Field::of_order(2);
    for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 2}}) {
        const std::size_t n = dims_size(dims);
        const std::size_t n1 = std::min(dims[0], dims[1]), n2 = std::max(dims[0], dims[1]);
        for (int t = 0; t < 20; ++t) {
            TensorCode c(dims, oracle::random_subspace_of_dim(f, n, 1 + t % (n - 1), rng));
            auto td = brute_profile(c, spaces(Family::Delsarte, f, dims));
            std::size_t dperp = min_distance(c.dual());
            for (std::size_t j = 1; j <= c.dim(); ++j) {
                CHECK(td[j - 1] % n2 == 0);
                CHECK(is_jbmd_r2(c, j) == (n1 < td[j - 1] / n2 + dperp));
            }
        }
    }
    CHECK_THROWS(is_jbmd_r2(TensorCode({2, 2, 2}, Subspace(f, 8, {Vec(8, 1)})), 1));
}

TEST_CASE("Wei duality, every code in 2x2 over GF(2)") {
    auto f = Field::of_order(2);
    std::size_t codes = 0;
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& s : enumerate_subspaces(f, 4, k)) {
            TensorCode c({2, 2}, s);
            for (const auto& w : wei_duality(c)) {
                CAPTURE(k);
                CHECK(w.partition);
                std::set<std::size_t> all = w.dual_side;
                all.insert(w.code_side.begin(), w.code_side.end());
                CHECK(all == std::set<std::size_t>{1, 2});
            }
            ++codes;
        }
    CHECK(codes == 15 + 35 + 15);
    CHECK_THROWS(wei_duality(TensorCode({2, 2}, Subspace::full(f, 4))));
}

TEST_CASE("closure example profile") {
    auto ex = fixtures::closure_example();
    CHECK(weight_profile(ex.code, Family::ClosureType) == ex.t_cl);
    for (std::size_t j = 1; j <= 3; ++j) CHECK(closure_weight_by_subcodes(ex.code, j) == ex.t_cl[j - 1]);
}
