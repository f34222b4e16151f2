#pragma once

// Brute-force reference computations shared by the unit tests.  Everything here
// works on the full ambient space and is only usable for tiny shapes.

#include <functional>
#include <set>
#include <vector>

#include "tencode/subspace.hpp"
#include "tencode/tensor.hpp"

namespace oracle {

using namespace tencode;

inline Vec decode(std::size_t code, std::size_t len, int q) {
    Vec v(len);
    for (auto& x : v) {
        x = Elem(code % q);
        code /= q;
    }
    return v;
}

inline std::size_t encode(const Vec& v, int q) {
    std::size_t c = 0;
    for (std::size_t i = v.size(); i-- > 0;) c = c * q + v[i];
    return c;
}

inline std::size_t ipow(std::size_t q, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= q;
    return r;
}

// Every nonzero simple tensor of the shape, all scalar multiples included.
inline std::set<Vec> simple_tensors(const FieldPtr& f, const Dims& dims) {
    std::set<Vec> simple;
    std::vector<Vec> fac;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == dims.size()) {
            simple.insert(Tensor::outer(f, fac).entries());
            return;
        }
        for (std::size_t c = 1; c < ipow(f->q(), dims[i]); ++c) {
            fac.push_back(decode(c, dims[i], f->q()));
            rec(i + 1);
            fac.pop_back();
        }
    };
    rec(0);
    return simple;
}

// Exact rank of every tensor of the shape (indexed by encode), by breadth-first
// search over sums of simple tensors.
inline std::vector<int> rank_table(const FieldPtr& f, const Dims& dims) {
    const std::size_t n = dims_size(dims);
    auto simple = simple_tensors(f, dims);
    std::vector<int> rank(ipow(f->q(), n), -1);
    rank[0] = 0;
    std::vector<std::size_t> frontier{0};
    for (int r = 1; !frontier.empty(); ++r) {
        std::vector<std::size_t> next;
        for (std::size_t c : frontier) {
            Vec v = decode(c, n, f->q());
            for (const auto& s : simple) {
                std::size_t d = encode(vec_add(*f, v, s), f->q());
                if (rank[d] < 0) {
                    rank[d] = r;
                    next.push_back(d);
                }
            }
        }
        frontier = std::move(next);
    }
    return rank;
}

// All vectors of a subspace.
inline std::vector<Vec> elements(const Subspace& s) {
    const Field& f = *s.field();
    std::vector<Vec> out;
    for (std::size_t code = 0; code < ipow(f.q(), s.dim()); ++code) {
        Vec c = decode(code, s.dim(), f.q());
        Vec v(s.ambient_dim(), 0);
        for (std::size_t i = 0; i < c.size(); ++i) vec_axpy(f, v, c[i], s.basis()[i]);
        out.push_back(v);
    }
    return out;
}

// Subspace spanned by a random set of vectors; the dimension is whatever comes out.
template <class Rng>
Subspace random_subspace(const FieldPtr& f, std::size_t n, std::size_t gens, Rng& rng) {
    std::uniform_int_distribution<int> d(0, f->q() - 1);
    Matrix m(gens, Vec(n));
    for (auto& r : m)
        for (auto& x : r) x = Elem(d(rng));
    return Subspace(f, n, m);
}

// Random subspace of exactly dimension k.
template <class Rng>
Subspace random_subspace_of_dim(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng) {
    for (;;) {
        auto s = random_subspace(f, n, k, rng);
        if (s.dim() == k) return s;
    }
}

} // namespace oracle
