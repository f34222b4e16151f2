#include <doctest.h>

#include <random>

#include "tencode/moments.hpp"
#include "oracle.hpp"

using namespace tencode;

namespace {

struct Case {
    int q;
    Dims dims;
};

const Case kCases[] = {{2, {2, 2}}, {3, {2, 2}}, {2, {2, 3}}, {2, {2, 2, 2}}};
const Family kFamilies[] = {Family::ClosureType, Family::Delsarte, Family::Ravagnani, Family::DualClosureType};

std::size_t count_dim(std::size_t count, int q) {
    std::size_t d = 0;
    while (count > 1) {
        count /= q;
        ++d;
    }
    return d;
}

std::size_t brute_meet_dim(const std::vector<Vec>& code_elems, const Subspace& a, int q) {
    std::size_t common = 0;
    for (const auto& v : code_elems) common += a.contains(v);
    return count_dim(common, q);
}

// Every j-dim subspace of the ambient space lying inside C.
std::vector<Subspace> brute_subcodes(const TensorCode& c, std::size_t j) {
    std::vector<Subspace> out;
    for (const auto& s : enumerate_subspaces(c.field(), c.length(), j))
        if (c.space().contains(s)) out.push_back(s);
    return out;
}

} // namespace

TEST_CASE("binomial moments against brute force") {
    std::mt19937 rng(61);
    for (const auto& cs : kCases)
        for (Family fam : kFamilies) {
            auto f = Field::of_order(cs.q);
            const std::size_t n = dims_size(cs.dims);
            auto members = enumerate_family(fam, f, cs.dims);
            for (int t = 0; t < 4; ++t) {
                TensorCode c(cs.dims, oracle::random_subspace_of_dim(f, n, 1 + t % 3, rng));
                auto elems = oracle::elements(c.space());
                IntTable expect(n + 1, std::vector<Integer>(c.dim() + 1, 0));
                for (const auto& a : members) {
                    std::size_t x = brute_meet_dim(elems, a.space(), cs.q);
                    for (std::size_t j = 0; j <= c.dim(); ++j) expect[a.dim()][j] += qbinom_count(cs.q, x, j);
                }
                auto b = binomial_moments(c, fam);
                CHECK(b == expect);
                CHECK(moment_case_violations(c, fam, b).empty());
                auto b1 = binomial_moments(c, fam, Limits{}, 1);
                for (std::size_t a = 0; a <= n; ++a) CHECK(b1[a] == std::vector<Integer>{b[a][0], b[a][1]});
            }
        }
}

TEST_CASE("moments of tiny codes") {
    auto f = Field::of_order(2);
    Dims dims{2, 2};
    auto members = enumerate_family(Family::ClosureType, f, dims);
    // full space, j = 1: every member meets it fully
    TensorCode full(dims, Subspace::full(f, 4));
    auto b = binomial_moments(full, Family::ClosureType);
    for (std::size_t a = 0; a <= 4; ++a) CHECK(b[a][1] == qbinom_count(2, a, 1) * b[a][0]);
    CHECK(b[1][0] == 9);
    CHECK(b[2][0] == 6);
    CHECK(b[4][0] == 1);

    // a simple tensor: its weight sits at dimension 1
    TensorCode e(dims, Subspace(f, 4, {{1, 0, 0, 0}}));
    auto w = weight_distribution(e, Family::ClosureType);
    CHECK(w[1][1] == 1);
    for (std::size_t a = 0; a <= 4; ++a)
        if (a != 1) CHECK(w[a][1] == 0);
}

TEST_CASE("interval counts") {
    for (const auto& cs : kCases)
        for (Family fam : kFamilies) {
            auto f = Field::of_order(cs.q);
            auto lat = build_family_lattice(fam, f, cs.dims);
            auto nc = interval_counts(lat);
            const std::size_t n = dims_size(cs.dims);
            IntTable expect(n + 1, std::vector<Integer>(n + 1, 0));
            for (const auto& x : lat.spaces)
                for (const auto& y : lat.spaces)
                    if (y.contains(x)) expect[x.dim()][y.dim()] += 1;
            CHECK(nc == expect);
        }
}

TEST_CASE("direct weights against brute force") {
    std::mt19937 rng(62);
    for (const auto& cs : kCases)
        for (Family fam : kFamilies) {
            CAPTURE(family_name(fam));
            auto f = Field::of_order(cs.q);
            const std::size_t n = dims_size(cs.dims);
            auto lat = build_family_lattice(fam, f, cs.dims);
            for (int t = 0; t < 3; ++t) {
                TensorCode c(cs.dims, oracle::random_subspace_of_dim(f, n, 1 + t % 3, rng));
                std::vector<Integer> orphans;
                auto w = member_weights(c, lat, Limits{}, &orphans);
                for (std::size_t j = 1; j <= c.dim(); ++j) {
                    std::vector<Integer> expect(lat.members.size(), 0);
                    Integer lost = 0;
                    for (const auto& d : brute_subcodes(c, j)) {
                        // least member containing D, if there is one
                        std::optional<std::size_t> least;
                        for (std::size_t i = 0; i < lat.spaces.size(); ++i) {
                            if (!lat.spaces[i].contains(d)) continue;
                            bool below_all = true;
                            for (const auto& s : lat.spaces)
                                if (s.contains(d) && !s.contains(lat.spaces[i])) below_all = false;
                            if (below_all) least = i;
                        }
                        if (least) expect[*least] += 1;
                        else lost += 1;
                    }
                    for (std::size_t i = 0; i < lat.members.size(); ++i) CHECK(w[i][j] == Rational(expect[i]));
                    CHECK(orphans[j] == lost);
                    Rational total = 0;
                    for (std::size_t i = 0; i < lat.members.size(); ++i) total += w[i][j];
                    CHECK(total + Rational(orphans[j]) == Rational(qbinom_count(cs.q, c.dim(), j)));
                }
                // with no orphans the zeta transform of W is B, member by member
                bool clean = true;
                for (const auto& o : orphans) clean &= o == 0;
                if (fam == Family::ClosureType) CHECK(clean);
                if (clean) CHECK(bw_transform(lat, w, Direction::WeightsToMoments) == member_moments(c, lat));
            }
        }
}

TEST_CASE("subcodes with no least member") {
    {
        // e1 (x) e1 lies in <e1> (x) F and F (x) <e1>, whose dual closure-type meet is zero
        auto f = Field::of_order(2);
        auto lat = build_family_lattice(Family::DualClosureType, f, {2, 2});
        std::vector<Integer> orphans;
        member_weights(TensorCode({2, 2}, Subspace(f, 4, {{1, 0, 0, 0}})), lat, Limits{}, &orphans);
        CHECK(orphans[1] == 1);
    }
    auto f = Field::of_order(2);
    Dims dims{2, 2};
    auto lat = build_family_lattice(Family::Delsarte, f, dims);
    TensorCode c(dims, Subspace(f, 4, {{1, 0, 0, 0}}));
    std::vector<Integer> orphans;
    auto w = member_weights(c, lat, Limits{}, &orphans);
    CHECK(orphans[1] == 1);
    auto inv = bw_transform(lat, member_moments(c, lat), Direction::MomentsToWeights);
    // the full space picks up a negative coefficient
    CHECK(inv.back()[1] == -1);
    CHECK(w.back()[1] == 0);
    // one allowed mode (2x3): every subcode has a least member
    auto lat23 = build_family_lattice(Family::Delsarte, f, {2, 3});
    std::mt19937 rng(65);
    for (int t = 0; t < 10; ++t) {
        TensorCode c({2, 3}, oracle::random_subspace(f, 6, 1 + t % 4, rng));
        member_weights(c, lat23, Limits{}, &orphans);
        for (const auto& o : orphans) CHECK(o == 0);
    }
}

TEST_CASE("transform round trip on random tables") {
    std::mt19937 rng(63);
    std::uniform_int_distribution<int> val(-9, 9);
    for (const auto& cs : kCases)
        for (Family fam : kFamilies) {
            auto lat = build_family_lattice(fam, Field::of_order(cs.q), cs.dims);
            MemberTable t(lat.members.size(), std::vector<Rational>(3));
            for (auto& r : t)
                for (auto& x : r) x = Rational(val(rng), 1 + (val(rng) & 3));
            CHECK(bw_transform(lat, bw_transform(lat, t, Direction::WeightsToMoments), Direction::MomentsToWeights) == t);
            CHECK(bw_transform(lat, bw_transform(lat, t, Direction::MomentsToWeights), Direction::WeightsToMoments) == t);
        }
}

TEST_CASE("MacWilliams identities and the dual intersection formula") {
    std::mt19937 rng(64);
    for (const auto& cs : kCases)
        for (Family fam : kFamilies) {
            auto f = Field::of_order(cs.q);
            const std::size_t n = dims_size(cs.dims);
            auto members = enumerate_family(fam, f, cs.dims);
            for (int t = 0; t < 4; ++t) {
                TensorCode c(cs.dims, oracle::random_subspace(f, n, 1 + t % n, rng));
                auto r = macwilliams_check(c, fam);
                CHECK(r.holds);
                CHECK(r.cells == (n + 1) * (c.dim() + 1));
                CHECK(dual_intersection_violations(c, fam) == 0);
                auto elems = oracle::elements(c.space());
                auto delems = oracle::elements(c.dual().space());
                for (const auto& a : members) {
                    auto x = brute_meet_dim(elems, a.space(), cs.q);
                    auto y = brute_meet_dim(delems, a.space().complement(), cs.q);
                    CHECK(std::int64_t(x) == std::int64_t(y) + std::int64_t(c.dim() + a.dim()) - std::int64_t(n));
                }
            }
        }
}

TEST_CASE("a corrupted table is caught") {
    auto f = Field::of_order(2);
    TensorCode c({2, 2}, Subspace(f, 4, {{1, 0, 0, 1}}));
    auto b = binomial_moments(c, Family::ClosureType);
    CHECK(moment_case_violations(c, Family::ClosureType, b).empty());
    b[0][1] += 1;
    CHECK_FALSE(moment_case_violations(c, Family::ClosureType, b).empty());
}
