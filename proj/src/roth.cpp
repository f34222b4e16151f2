#include "tencode/roth.hpp"

#include <sstream>
#include <stdexcept>

#include "tencode/qcomb.hpp"

namespace tencode {

namespace {

void check_params(const RothParams& p) {
    if (!p.base || !p.ext) throw std::invalid_argument("roth: fields not set");
    if (!p.base->is_prime() || p.ext->p() != p.base->p())
        throw std::invalid_argument("roth: base must be a prime field of the extension's characteristic");
    if (static_cast<std::size_t>(p.ext->m()) != p.mu)
        throw std::invalid_argument("roth: extension degree must equal mu");
    for (const FieldBasis* b : {&p.alpha, &p.beta, &p.omega}) {
        if (!same_field(b->field, p.ext) || b->elems.size() != p.mu || !is_basis(*p.ext, b->elems))
            throw std::invalid_argument("roth: alpha, beta and omega must be bases of the extension");
    }
}

std::size_t hamming_weight(const Vec& v) {
    std::size_t w = 0;
    for (Elem e : v) w += e != 0;
    return w;
}

// ext element -> base-field coordinates in the basis
Vec coords(const FieldBasis& b, const FieldBasis& dual, Elem a) {
    const Field& f = *b.field;
    Vec c(f.m());
    for (int i = 0; i < f.m(); ++i) c[i] = f.trace(f.mul(a, dual.elems[i]));
    return c;
}

} // namespace

std::string RothParams::label() const {
    std::ostringstream os;
    os << "C(" << mu << "," << nu << ",3;" << (base ? base->q() : 0) << ")";
    return os.str();
}

RothParams roth_params(std::size_t mu, std::size_t nu, int p, const std::optional<std::vector<int>>& modulus) {
    if (mu < 1) throw std::invalid_argument("roth: mu must be positive");
    RothParams r;
    r.mu = mu;
    r.nu = nu;
    r.base = Field::prime(p);
    if (modulus) {
        r.ext = Field::create(p, *modulus);
    } else {
        long long q = 1;
        for (std::size_t i = 0; i < mu; ++i) {
            q *= p;
            if (q > 256) throw std::invalid_argument("roth: p^mu exceeds 256");
        }
        r.ext = Field::of_order(static_cast<int>(q));
    }
    r.alpha = r.beta = r.omega = polynomial_basis(r.ext);
    check_params(r);
    return r;
}

bool block_code_exists(int q, std::size_t n, std::size_t k, std::size_t d, const Limits& limits) {
    if (k > n) throw std::invalid_argument("block_code_exists: k > n");
    if (k == 0 || d == 0) return true;
    if (d > n) return false;
    auto f = Field::of_order(q);
    if (qbinom_count(q, n, k) > limits.objects)
        throw BudgetExceeded("block_code_exists: too many subspaces");
    bool found = false;
    for_each_subspace(f, n, k, [&](const Subspace& s) {
        if (found) return;
        bool ok = true;
        // the minimum weight is attained on a projective codeword
        for_each_projective(*f, k, [&](const Vec& c) {
            if (!ok) return;
            Vec w(n, 0);
            for (std::size_t i = 0; i < k; ++i)
                if (c[i]) vec_axpy(*f, w, c[i], s.basis()[i]);
            if (hamming_weight(w) < d) ok = false;
        });
        found = ok;
    });
    return found;
}

RothIndexSets s_sets(const RothParams& params, const Limits& limits) {
    check_params(params);
    RothIndexSets r;
    const int p = params.base->q();
    for (std::size_t l = 0; l < params.mu; ++l)
        for (std::size_t s = 0; s < params.mu; ++s) {
            if (block_code_exists(p, params.mu, l + 1, s + 1, limits)) r.s.emplace_back(l, s);
            else r.s_bar.emplace_back(l, s);
        }
    return r;
}

ConstructionMatrices build_matrices(const RothParams& params, const Limits& limits) {
    check_params(params);
    const Field& e = *params.ext;
    ConstructionMatrices m;
    m.sets = s_sets(params, limits);
    m.alpha_dual = dual_basis(params.alpha);
    m.beta_dual = dual_basis(params.beta);
    auto row = [&](const FieldBasis& a, const FieldBasis& b, IndexPair ls) {
        Vec r;
        for (std::size_t i = 0; i < params.mu; ++i)
            for (std::size_t j = 0; j < params.mu; ++j)
                r.push_back(e.mul(e.frobenius(a.elems[i], static_cast<int>(ls.first)),
                                  e.frobenius(b.elems[j], static_cast<int>(ls.second))));
        return r;
    };
    for (auto ls : m.sets.s) m.h.push_back(row(params.alpha, params.beta, ls));
    for (auto ls : m.sets.s_bar) m.g.push_back(row(m.alpha_dual, m.beta_dual, ls));
    return m;
}

TensorCode roth_code(const RothParams& params, const Limits& limits) {
    auto m = build_matrices(params, limits);
    const Field& e = *params.ext;
    const std::size_t mu = params.mu;
    auto omega_dual = dual_basis(params.omega);
    auto xis = polynomial_basis(params.ext).elems;
    std::vector<Tensor> gens;
    for (const Vec& g : m.g) {
        for (Elem xi : xis) {
            Tensor x = Tensor::zeros(params.base, params.dims());
            for (std::size_t i = 0; i < mu; ++i)
                for (std::size_t j = 0; j < mu; ++j) {
                    Vec c = coords(params.omega, omega_dual, e.mul(xi, g[i * mu + j]));
                    for (std::size_t t = 0; t < mu; ++t) x.set({i, j, t}, c[t]);
                }
            gens.push_back(std::move(x));
        }
    }
    return TensorCode(params.base, params.dims(), gens);
}

TensorCode roth_code_kernel(const RothParams& params, const Limits& limits) {
    auto m = build_matrices(params, limits);
    const Field& e = *params.ext;
    const std::size_t mu = params.mu, n = mu * mu * mu;
    auto poly = polynomial_basis(params.ext);
    auto poly_dual = dual_basis(poly);
    // each parity check over the extension becomes mu checks over the base field
    Matrix checks;
    for (const Vec& h : m.h) {
        Matrix block(mu, Vec(n, 0));
        for (std::size_t ij = 0; ij < mu * mu; ++ij)
            for (std::size_t t = 0; t < mu; ++t) {
                Vec c = coords(poly, poly_dual, e.mul(h[ij], params.omega.elems[t]));
                for (std::size_t u = 0; u < mu; ++u) block[u][ij * mu + t] = c[u];
            }
        for (auto& r : block) checks.push_back(std::move(r));
    }
    auto ker = null_space(*params.base, checks, n);
    return TensorCode(params.dims(), Subspace(params.base, n, ker));
}

Vec roth_syndrome(const RothParams& params, const ConstructionMatrices& m, const Tensor& x) {
    const Field& e = *params.ext;
    const std::size_t mu = params.mu;
    if (x.dims() != params.dims()) throw std::invalid_argument("roth_syndrome: shape mismatch");
    Vec syn;
    for (const Vec& h : m.h) {
        Elem acc = 0;
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = 0; j < mu; ++j)
                for (std::size_t t = 0; t < mu; ++t) {
                    Elem v = x.at({i, j, t});
                    if (!v) continue;
                    acc = e.add(acc, e.mul(v, e.mul(h[i * mu + j], params.omega.elems[t])));
                }
        syn.push_back(acc);
    }
    return syn;
}

} // namespace tencode
