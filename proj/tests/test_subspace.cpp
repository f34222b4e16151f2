#include <doctest.h>

#include <random>
#include <set>

#include "tencode/qcomb.hpp"
#include "tencode/subspace.hpp"

using namespace tencode;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, f.q() - 1);
    Matrix m(rows, Vec(n));
    for (auto& r : m)
        for (auto& x : r) x = Elem(d(rng));
    return m;
}

// Every vector of the span, by brute force over coefficient vectors.
std::set<Vec> span_set(const Field& f, const Matrix& gens, std::size_t n) {
    std::set<Vec> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) total *= f.q();
    for (std::size_t code = 0; code < total; ++code) {
        Vec v(n, 0);
        std::size_t c = code;
        for (const auto& g : gens) {
            vec_axpy(f, v, Elem(c % f.q()), g);
            c /= f.q();
        }
        out.insert(v);
    }
    return out;
}

std::size_t log_q(std::size_t size, int q) {
    std::size_t d = 0;
    while (size > 1) {
        size /= q;
        ++d;
    }
    return d;
}

} // namespace

TEST_CASE("rref is canonical") {
    auto f = Field::of_order(3);
    std::mt19937 rng(1);
    for (int t = 0; t < 40; ++t) {
        auto m = random_matrix(*f, 3, 5, rng);
        Subspace s(f, 5, m);
        CHECK(s.dim() == log_q(span_set(*f, m, 5).size(), 3));
        CHECK(s.dim() == matrix_rank(*f, m, 5));
        // a shuffled, rescaled generating set gives the same basis
        Matrix m2 = m;
        std::shuffle(m2.begin(), m2.end(), rng);
        for (auto& r : m2) r = vec_scale(*f, 2, r);
        m2.push_back(vec_add(*f, m[0], m[1]));
        CHECK(Subspace(f, 5, m2) == s);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            CHECK(s.basis()[i][s.pivots()[i]] == 1);
            for (std::size_t j = 0; j < s.dim(); ++j)
                if (j != i) CHECK(s.basis()[j][s.pivots()[i]] == 0);
        }
    }
}

TEST_CASE("membership, coordinates and reduction") {
    auto f = Field::of_order(4);
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(*f, 2, 4, rng);
        Subspace s(f, 4, m);
        auto all = span_set(*f, m, 4);
        auto probe = random_matrix(*f, 10, 4, rng);
        for (const auto& v : probe) {
            CHECK(s.contains(v) == (all.count(v) == 1));
            CHECK(is_zero(s.reduce(v)) == s.contains(v));
            if (s.contains(v)) {
                auto c = s.coordinates(v);
                Vec back(4, 0);
                for (std::size_t i = 0; i < c.size(); ++i) vec_axpy(*f, back, c[i], s.basis()[i]);
                CHECK(back == v);
            } else {
                CHECK_THROWS(s.coordinates(v));
            }
        }
    }
}

TEST_CASE("sum, intersection and complement") {
    for (int q : {2, 3}) {
        auto f = Field::of_order(q);
        std::mt19937 rng(3 + q);
        for (int t = 0; t < 30; ++t) {
            Subspace u(f, 4, random_matrix(*f, 2, 4, rng));
            Subspace v(f, 4, random_matrix(*f, 2, 4, rng));
            auto su = span_set(*f, u.basis(), 4), sv = span_set(*f, v.basis(), 4);
            std::set<Vec> both;
            for (const auto& x : su)
                if (sv.count(x)) both.insert(x);
            CHECK(u.intersect(v).dim() == log_q(both.size(), q));
            for (const auto& x : both) CHECK(u.intersect(v).contains(x));
            CHECK(u.sum(v).dim() + u.intersect(v).dim() == u.dim() + v.dim());
            CHECK(u.sum(v).contains(u));
            CHECK(u.sum(v).contains(v));

            auto c = u.complement();
            CHECK(c.dim() == 4 - u.dim());
            CHECK(c.complement() == u);
            for (const auto& a : u.basis())
                for (const auto& b : c.basis()) CHECK(dot(*f, a, b) == 0);
            CHECK(u.sum(v).complement() == c.intersect(v.complement()));
        }
    }
    auto f = Field::of_order(2);
    CHECK(Subspace::zero(f, 3).complement() == Subspace::full(f, 3));
    // self-orthogonal vectors exist in characteristic 2
    Subspace s(f, 2, {{1, 1}});
    CHECK(s.complement() == s);
    CHECK_THROWS(s.sum(Subspace::zero(f, 3)));
    CHECK_THROWS(s.sum(Subspace::zero(Field::of_order(3), 2)));
}

TEST_CASE("null space") {
    auto f = Field::of_order(3);
    std::mt19937 rng(4);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(*f, 2, 5, rng);
        auto ns = null_space(*f, m, 5);
        CHECK(ns.size() == 5 - matrix_rank(*f, m, 5));
        for (const auto& x : ns)
            for (const auto& r : m) CHECK(dot(*f, r, x) == 0);
        CHECK(Subspace(f, 5, ns) == Subspace(f, 5, m).complement());
    }
}

TEST_CASE("subspace enumeration") {
    for (int q : {2, 3, 4}) {
        auto f = Field::of_order(q);
        const std::size_t n = q == 2 ? 4 : 3;
        std::size_t total = 0;
        for (std::size_t d = 0; d <= n; ++d) {
            auto subs = enumerate_subspaces(f, n, d);
            CHECK(Integer(subs.size()) == qbinom_count(q, std::int64_t(n), std::int64_t(d)));
            std::set<Matrix> keys;
            for (const auto& s : subs) {
                CHECK(s.dim() == d);
                keys.insert(s.basis());
            }
            CHECK(keys.size() == subs.size());
            CHECK(std::is_sorted(subs.begin(), subs.end()));
            std::size_t streamed = 0;
            for_each_subspace(f, n, d, [&](const Subspace& s) {
                CHECK(keys.count(s.basis()) == 1);
                ++streamed;
            });
            CHECK(streamed == subs.size());
            total += subs.size();
        }
        CHECK(enumerate_all_subspaces(f, n).size() == total);
    }
    Limits tiny;
    tiny.objects = 10;
    CHECK_THROWS_AS(enumerate_subspaces(Field::of_order(2), 4, 2, tiny), BudgetExceeded);
}

TEST_CASE("projective vectors") {
    for (int q : {2, 3, 4, 5}) {
        auto f = Field::of_order(q);
        for (std::size_t k = 1; k <= 3; ++k) {
            std::set<Vec> seen;
            for_each_projective(*f, k, [&](const Vec& v) {
                CHECK(normalize(*f, v) == v);
                CHECK_FALSE(is_zero(v));
                seen.insert(v);
            });
            std::size_t expect = 1;
            for (std::size_t i = 0; i < k; ++i) expect *= q;
            CHECK(seen.size() == (expect - 1) / (q - 1));
        }
    }
}
