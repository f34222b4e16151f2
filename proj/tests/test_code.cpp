#include <doctest.h>

#include <random>

#include "tencode/code.hpp"
#include "tencode/fixtures.hpp"
#include "oracle.hpp"

using namespace tencode;

namespace {

struct Brute {
    std::size_t d = SIZE_MAX, max = 0;
};

Brute brute_ranks(const TensorCode& c, const std::vector<int>& table) {
    Brute b;
    for (const auto& v : oracle::elements(c.space())) {
        if (is_zero(v)) continue;
        std::size_t r = std::size_t(table[oracle::encode(v, c.field()->q())]);
        b.d = std::min(b.d, r);
        b.max = std::max(b.max, r);
    }
    return b;
}

// Least dimension of a span of simple tensors containing C, trying all spans of
// R simple tensors for increasing R.  Small shapes only.
std::size_t brute_tensor_rank(const TensorCode& c) {
    auto simple = oracle::simple_tensors(c.field(), c.dims());
    std::vector<Vec> reps;
    for (const auto& s : simple)
        if (normalize(*c.field(), s) == s) reps.push_back(s);
    for (std::size_t r = 0;; ++r) {
        std::vector<std::size_t> idx(r);
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
            if (pos == r) {
                Matrix m;
                for (auto i : idx) m.push_back(reps[i]);
                return Subspace(c.field(), c.length(), m).contains(c.space());
            }
            for (std::size_t i = from; i < reps.size(); ++i) {
                idx[pos] = i;
                if (rec(pos + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return r;
    }
}

} // namespace

TEST_CASE("min distance and max rank against brute force") {
    struct Shape {
        int q;
        Dims dims;
    };
    std::mt19937 rng(11);
    for (const auto& sh : {Shape{2, {2, 2, 2}}, Shape{3, {2, 2, 2}}, Shape{2, {2, 3}}, Shape{3, {3, 3}},
                           Shape{2, {2, 2, 3}}}) {
        auto f = Field::of_order(sh.q);
        auto table = oracle::rank_table(f, sh.dims);
        const std::size_t n = dims_size(sh.dims);
        for (int t = 0; t < 25; ++t) {
            std::size_t k = 1 + t % std::min<std::size_t>(n, 4);
            TensorCode c(sh.dims, oracle::random_subspace_of_dim(f, n, k, rng));
            auto b = brute_ranks(c, table);
            CHECK(min_distance(c) == b.d);
            CHECK(max_rank(c) == b.max);
            auto p = code_params(c);
            CHECK(p.dim == k);
            CHECK(p.length == n);
            CHECK(*p.min_distance == b.d);
            CHECK(p.max_rank <= p.tensor_rank);
        }
    }
    auto f = Field::of_order(2);
    CHECK_THROWS(min_distance(TensorCode({2, 2}, Subspace::zero(f, 4))));
    CHECK_FALSE(code_params(TensorCode({2, 2}, Subspace::zero(f, 4))).min_distance.has_value());
}

TEST_CASE("code tensor rank against brute force") {
    std::mt19937 rng(12);
    for (const Dims& dims : {Dims{2, 2}, Dims{2, 3}, Dims{2, 2, 2}}) {
        auto f = Field::of_order(2);
        const std::size_t n = dims_size(dims);
        for (int t = 0; t < 12; ++t) {
            std::size_t k = 1 + t % 3;
            TensorCode c(dims, oracle::random_subspace_of_dim(f, n, k, rng));
            auto r = code_tensor_rank(c);
            CHECK(r.rank == brute_tensor_rank(c));
            // the witness spans a perfect space containing C
            Matrix span;
            for (auto fac : r.witness) {
                fac.pop_back();  // the stacking coordinate
                span.push_back(Tensor::outer(f, fac).entries());
            }
            CHECK(Subspace(f, n, span).contains(c.space()));
        }
    }
}

TEST_CASE("closure, dual and stacking") {
    auto f = Field::of_order(3);
    std::mt19937 rng(13);
    Dims dims{2, 3, 2};
    for (int t = 0; t < 20; ++t) {
        TensorCode c(dims, oracle::random_subspace(f, 12, 3, rng));
        auto cl = c.closure();
        // span of the fiber spans of every codeword
        for (std::size_t i = 0; i < 3; ++i) {
            Subspace acc = Subspace::zero(f, dims[i]);
            for (const auto& v : oracle::elements(c.space())) acc = acc.sum(Tensor(f, dims, v).fiber_span(i));
            CHECK(cl[i] == acc);
        }
        CHECK(kernel::product_space(f, dims, cl).contains(c.space()));
        CHECK(c.dual().dim() == 12 - c.dim());
        CHECK(c.dual().dual() == c);
        auto s = c.stacked();
        CHECK(s.dims() == Dims{2, 3, 2, c.dim()});
        for (std::size_t b = 0; b < c.dim(); ++b) {
            Vec e(c.dim(), 0);
            e[b] = 1;
            CHECK(kernel::contract(*f, s.dims(), s.entries(), 3, e) == c.space().basis()[b]);
        }
        auto v = oracle::random_subspace(f, 12, 5, rng);
        std::size_t both = 0;
        for (const auto& x : oracle::elements(c.space())) both += v.contains(x);
        CHECK(oracle::ipow(3, intersection_dim(c, v)) == both);
    }
}

TEST_CASE("codewords are enumerated projectively") {
    auto f = Field::of_order(4);
    TensorCode c({2, 2}, Subspace(f, 4, {{1, 0, 0, 1}, {0, 1, 2, 3}}));
    std::size_t count = 0;
    for_each_projective_codeword(c, Limits{}, [&](const Vec& coef, const Tensor& x) {
        CHECK(normalize(*f, coef) == coef);
        CHECK(c.space().contains(x.entries()));
        ++count;
    });
    CHECK(count == 5);
    Limits tiny;
    tiny.objects = 4;
    CHECK_THROWS_AS(min_distance(c, tiny), BudgetExceeded);
}

TEST_CASE("closure example parameters") {
    auto ex = fixtures::closure_example();
    auto p = code_params(ex.code);
    CHECK(p.dim == 3);
    CHECK(p.length == 24);
    CHECK(*p.min_distance == 2);
    auto cl = ex.code.closure();
    CHECK(cl[0].dim() == 2);
    CHECK(cl[1].dim() == 3);
    CHECK(cl[2].dim() == 4);
}
