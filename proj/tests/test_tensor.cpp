#include <doctest.h>

#include <map>
#include <random>

#include "tencode/subspace.hpp"
#include "tencode/tensor.hpp"
#include "oracle.hpp"

using namespace tencode;

using oracle::decode;
using oracle::rank_table;

TEST_CASE("layout and fibers") {
    auto f = Field::of_order(3);
    Dims dims{2, 3, 4};
    Vec e(24);
    for (std::size_t i = 0; i < 24; ++i) e[i] = Elem(i % 3);
    Tensor x(f, dims, e);
    CHECK(x.offset({1, 2, 3}) == 1 * 12 + 2 * 4 + 3);
    CHECK(x.at({1, 0, 2}) == e[14]);
    // free index at the mode, the others filled cyclically from the next mode on
    CHECK(x.fiber(0, {2, 1}) == Vec{x.at({0, 2, 1}), x.at({1, 2, 1})});
    CHECK(x.fiber(1, {3, 1}) == Vec{x.at({1, 0, 3}), x.at({1, 1, 3}), x.at({1, 2, 3})});
    CHECK(x.fiber(2, {1, 2}) == Vec{x.at({1, 2, 0}), x.at({1, 2, 1}), x.at({1, 2, 2}), x.at({1, 2, 3})});
    CHECK(x.fibers(0).size() == 12);
    CHECK(x.fibers(2).size() == 6);

    // fiber span equals the span of all vectors along the mode, however they are listed
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(0, 2);
    for (int t = 0; t < 20; ++t) {
        Vec v(24);
        for (auto& a : v) a = Elem(d(rng));
        Tensor y(f, dims, v);
        for (std::size_t mode = 0; mode < 3; ++mode) {
            Matrix cols;
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 3; ++b)
                    for (std::size_t c = 0; c < 4; ++c) {
                        std::vector<std::size_t> idx{a, b, c};
                        if (idx[mode] != 0) continue;
                        Vec fib;
                        for (std::size_t s = 0; s < dims[mode]; ++s) {
                            idx[mode] = s;
                            fib.push_back(y.at(idx));
                        }
                        cols.push_back(fib);
                    }
            CHECK(y.fiber_span(mode) == Subspace(f, dims[mode], cols));
        }
        auto cl = y.closure();
        CHECK(kernel::product_space(f, dims, cl).contains(y.entries()));
    }
}

TEST_CASE("slices, outer products and star") {
    auto f = Field::of_order(2);
    Tensor x = Tensor::outer(f, {{1, 0}, {1, 1, 0}, {0, 1}});
    CHECK(x.dims() == Dims{2, 3, 2});
    CHECK(x.is_rank_one());
    CHECK(x.slices(0) == std::vector<Vec>{{0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0}});
    CHECK(x.slices(2) == std::vector<Vec>{{0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}});
    CHECK(star(x, x) == 0);  // four ones
    Tensor y = Tensor::outer(f, {{1, 1}, {1, 0, 0}, {1, 1}});
    CHECK(star(x, y) == 1);
    CHECK_FALSE((x + x).is_rank_one());
    CHECK((x + x).is_zero());
    CHECK_THROWS(x + Tensor::zeros(f, {2, 2, 3}));
    CHECK_THROWS(Tensor(f, {2, 2}, Vec(5)));
}

TEST_CASE("kernel helpers") {
    auto f = Field::of_order(3);
    Dims dims{2, 3};
    Subspace e(f, 3, {{1, 2, 0}});
    auto v = kernel::single_mode_space(f, dims, 1, e);
    CHECK(v.dim() == 2);
    CHECK(kernel::largest_single_mode(f, dims, v, 1) == e);
    CHECK(kernel::largest_single_mode(f, dims, v, 0).dim() == 0);
    CHECK(kernel::product_space(f, dims, {Subspace::full(f, 2), e}) == v);

    // largest_single_mode against brute force over all candidate factors
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> d(0, 2);
    for (int t = 0; t < 30; ++t) {
        Matrix g(3, Vec(6));
        for (auto& r : g)
            for (auto& x : r) x = Elem(d(rng));
        Subspace w(f, 6, g);
        w = w.sum(kernel::single_mode_space(f, dims, t % 2, Subspace(f, dims[t % 2], {Vec(dims[t % 2], 1)})));
        for (std::size_t mode = 0; mode < 2; ++mode) {
            std::size_t best = 0;
            for (const auto& cand : enumerate_all_subspaces(f, dims[mode]))
                if (w.contains(kernel::single_mode_space(f, dims, mode, cand))) best = std::max(best, cand.dim());
            auto l = kernel::largest_single_mode(f, dims, w, mode);
            CHECK(l.dim() == best);
            CHECK(w.contains(kernel::single_mode_space(f, dims, mode, l)));
        }
    }

    // contraction with a basis vector picks a slice
    Tensor x(f, {2, 3}, {1, 2, 0, 0, 1, 1});
    CHECK(kernel::contract(*f, dims, x.entries(), 0, {0, 1}) == Vec{0, 1, 1});
    CHECK(kernel::contract(*f, dims, x.entries(), 1, {1, 1, 1}) == Vec{0, 2});
}

TEST_CASE("rank against breadth-first search") {
    struct Shape {
        int q;
        Dims dims;
    };
    for (const auto& sh : {Shape{2, {2, 2}}, Shape{3, {2, 2}}, Shape{2, {2, 3}}, Shape{2, {2, 2, 2}},
                           Shape{3, {2, 2, 2}}, Shape{2, {2, 2, 3}}}) {
        auto f = Field::of_order(sh.q);
        auto table = rank_table(f, sh.dims);
        const std::size_t n = dims_size(sh.dims);
        std::map<int, int> hist;
        for (std::size_t c = 0; c < table.size(); ++c) {
            Tensor x(f, sh.dims, decode(c, n, sh.q));
            auto r = tensor_rank(x);
            REQUIRE(r.has_value());
            CHECK(int(r->rank) == table[c]);
            CHECK(rank_lower_bound(x) <= r->rank);
            CHECK(x.is_rank_one() == (table[c] == 1));
            Tensor sum = Tensor::zeros(f, sh.dims);
            for (const auto& term : r->witness) sum = sum + Tensor::outer(f, term);
            CHECK(sum == x);
            if (table[c] > 0) {
                CHECK_FALSE(tensor_rank(x, Limits{}, std::size_t(table[c] - 1)).has_value());
            }
            ++hist[table[c]];
        }
        if (sh.dims.size() == 2) {
            for (std::size_t c = 0; c < table.size(); c += 7) {
                Vec v = decode(c, n, sh.q);
                Matrix m;
                for (std::size_t i = 0; i < sh.dims[0]; ++i)
                    m.emplace_back(v.begin() + i * sh.dims[1], v.begin() + (i + 1) * sh.dims[1]);
                CHECK(std::size_t(table[c]) == matrix_rank(*f, m, sh.dims[1]));
            }
        }
        if (sh.q == 2 && sh.dims == Dims{2, 2, 2}) {
            CHECK(hist[3] > 0);
            CHECK(hist.rbegin()->first == 3);
        }
    }
}

TEST_CASE("sampled ranks in 2x3x3 over GF(2)") {
    auto f = Field::of_order(2);
    Dims dims{2, 3, 3};
    auto table = rank_table(f, dims);
    std::mt19937 rng(8);
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
    for (int t = 0; t < 150; ++t) {
        std::size_t c = pick(rng);
        auto r = tensor_rank(Tensor(f, dims, decode(c, 18, 2)));
        REQUIRE(r.has_value());
        CHECK(int(r->rank) == table[c]);
    }
}

TEST_CASE("perfect hull against brute force") {
    auto f = Field::of_order(2);
    Dims dims{2, 2};
    auto all = enumerate_all_subspaces(f, 4);
    // perfect = spanned by its own rank-one elements
    std::vector<Subspace> perfect;
    for (const auto& s : all) {
        Matrix ones;
        for (std::size_t c = 1; c < 16; ++c) {
            Vec v = decode(c, 4, 2);
            if (s.contains(v) && kernel::is_rank_one(*f, dims, v)) ones.push_back(v);
        }
        if (Subspace(f, 4, ones) == s) perfect.push_back(s);
    }
    for (const auto& s : all) {
        std::size_t best = 99;
        for (const auto& p : perfect)
            if (p.contains(s)) best = std::min(best, p.dim());
        auto h = perfect_hull(f, dims, s);
        REQUIRE(h.has_value());
        CHECK(h->dim == best);
        Matrix span;
        for (const auto& b : h->basis) {
            CHECK(kernel::is_rank_one(*f, dims, b.flat));
            CHECK(Tensor::outer(f, b.factors).entries() == b.flat);
            span.push_back(b.flat);
        }
        CHECK(Subspace(f, 4, span).contains(s));
    }
}

TEST_CASE("rank budget") {
    auto f = Field::of_order(2);
    // a rank-3 tensor in 2x2x2: e1 e1 e2 + e1 e2 e1 + e2 e1 e1
    Tensor w = Tensor::outer(f, {{1, 0}, {1, 0}, {0, 1}}) + Tensor::outer(f, {{1, 0}, {0, 1}, {1, 0}}) +
               Tensor::outer(f, {{0, 1}, {1, 0}, {1, 0}});
    CHECK(tensor_rank(w)->rank == 3);
    Limits tiny;
    tiny.rank_nodes = 1;
    try {
        tensor_rank(w, tiny);
        FAIL("expected the budget to run out");
    } catch (const BudgetExceeded& e) {
        CHECK(e.lower() >= 2);
    }
}
