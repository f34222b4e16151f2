#include "tencode/tensor.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace tencode {

std::size_t dims_size(const Dims& dims) {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
}

void check_dims(const Dims& dims) {
    if (dims.empty()) throw std::invalid_argument("tensor order must be at least 1");
    for (auto d : dims)
        if (d == 0) throw std::invalid_argument("tensor dimensions must be positive");
}

Tensor::Tensor(FieldPtr f, Dims dims, Vec entries) : f_(std::move(f)), dims_(std::move(dims)), entries_(std::move(entries)) {
    if (!f_) throw std::invalid_argument("null field");
    check_dims(dims_);
    if (entries_.size() != dims_size(dims_))
        throw std::invalid_argument("expected " + std::to_string(dims_size(dims_)) + " entries, got " +
                                    std::to_string(entries_.size()));
    for (Elem e : entries_)
        if (e >= f_->q()) throw std::invalid_argument("entry out of range for " + f_->describe());
}

Tensor Tensor::zeros(FieldPtr f, Dims dims) {
    auto n = dims_size(dims);
    return Tensor(std::move(f), std::move(dims), Vec(n, 0));
}

Tensor Tensor::outer(FieldPtr f, const std::vector<Vec>& factors) {
    Dims dims;
    Vec flat{1};
    for (const auto& u : factors) {
        dims.push_back(u.size());
        Vec next(flat.size() * u.size());
        for (std::size_t i = 0; i < flat.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j) next[i * u.size() + j] = f->mul(flat[i], u[j]);
        flat = std::move(next);
    }
    return Tensor(std::move(f), std::move(dims), std::move(flat));
}

std::size_t Tensor::offset(const std::vector<std::size_t>& idx) const {
    if (idx.size() != dims_.size()) throw std::invalid_argument("index has wrong length");
    std::size_t off = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= dims_[i]) throw std::out_of_range("tensor index out of range");
        off = off * dims_[i] + idx[i];
    }
    return off;
}

Vec Tensor::fiber(std::size_t mode, const std::vector<std::size_t>& s) const {
    const std::size_t r = order();
    if (mode >= r) throw std::invalid_argument("mode out of range");
    if (s.size() != r - 1) throw std::invalid_argument("fiber selector has wrong length");
    std::vector<std::size_t> idx(r);
    for (std::size_t k = 1; k < r; ++k) idx[(mode + k) % r] = s[k - 1];
    Vec out(dims_[mode]);
    for (std::size_t t = 0; t < dims_[mode]; ++t) {
        idx[mode] = t;
        out[t] = at(idx);
    }
    return out;
}

std::vector<Vec> Tensor::fibers(std::size_t mode) const {
    const std::size_t r = order();
    if (mode >= r) throw std::invalid_argument("mode out of range");
    std::vector<std::size_t> sd(r - 1), s(r - 1, 0);
    for (std::size_t k = 1; k < r; ++k) sd[k - 1] = dims_[(mode + k) % r];
    std::vector<Vec> out;
    while (true) {
        out.push_back(fiber(mode, s));
        std::size_t k = s.size();
        while (k > 0 && ++s[k - 1] == sd[k - 1]) s[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

Subspace Tensor::fiber_span(std::size_t mode) const {
    if (mode >= order()) throw std::invalid_argument("mode out of range");
    return kernel::fiber_span(f_, dims_, {entries_}, mode);
}

std::vector<Subspace> Tensor::closure() const {
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < order(); ++i) out.push_back(fiber_span(i));
    return out;
}

std::vector<Vec> Tensor::slices(std::size_t mode) const {
    if (mode >= order()) throw std::invalid_argument("mode out of range");
    std::size_t outer = 1, inner = 1;
    for (std::size_t j = 0; j < mode; ++j) outer *= dims_[j];
    for (std::size_t j = mode + 1; j < order(); ++j) inner *= dims_[j];
    std::vector<Vec> out(dims_[mode], Vec(outer * inner));
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t t = 0; t < dims_[mode]; ++t)
            for (std::size_t i = 0; i < inner; ++i) out[t][o * inner + i] = entries_[(o * dims_[mode] + t) * inner + i];
    return out;
}

bool Tensor::is_zero() const { return tencode::is_zero(entries_); }

bool Tensor::is_rank_one() const { return kernel::is_rank_one(*f_, dims_, entries_); }

void Tensor::check(const Tensor& o) const {
    if (!same_field(f_, o.f_)) throw std::invalid_argument("tensors over different fields");
    if (dims_ != o.dims_) throw std::invalid_argument("tensor shapes differ");
}

Tensor Tensor::operator+(const Tensor& o) const {
    check(o);
    return Tensor(f_, dims_, vec_add(*f_, entries_, o.entries_));
}

Tensor Tensor::scaled(Elem c) const { return Tensor(f_, dims_, vec_scale(*f_, c, entries_)); }

bool Tensor::operator==(const Tensor& o) const {
    return same_field(f_, o.f_) && dims_ == o.dims_ && entries_ == o.entries_;
}

Elem star(const Tensor& a, const Tensor& b) {
    if (!same_field(a.field(), b.field())) throw std::invalid_argument("tensors over different fields");
    if (a.dims() != b.dims()) throw std::invalid_argument("tensor shapes differ");
    return dot(*a.field(), a.entries(), b.entries());
}

namespace kernel {

namespace {
void split(const Dims& dims, std::size_t mode, std::size_t& outer, std::size_t& inner) {
    outer = inner = 1;
    for (std::size_t j = 0; j < mode; ++j) outer *= dims[j];
    for (std::size_t j = mode + 1; j < dims.size(); ++j) inner *= dims[j];
}
} // namespace

Vec contract(const Field& f, const Dims& dims, const Vec& x, std::size_t mode, const Vec& h) {
    std::size_t outer, inner;
    split(dims, mode, outer, inner);
    const std::size_t n = dims[mode];
    Vec y(outer * inner, 0);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t t = 0; t < n; ++t) {
            Elem c = h[t];
            if (!c) continue;
            const Elem* src = &x[(o * n + t) * inner];
            Elem* dst = &y[o * inner];
            for (std::size_t i = 0; i < inner; ++i)
                if (src[i]) dst[i] = f.add(dst[i], f.mul(c, src[i]));
        }
    return y;
}

Subspace fiber_span(const FieldPtr& f, const Dims& dims, const std::vector<Vec>& xs, std::size_t mode) {
    std::size_t outer, inner;
    split(dims, mode, outer, inner);
    const std::size_t n = dims[mode];
    Matrix gens;
    for (const auto& x : xs)
        for (std::size_t o = 0; o < outer; ++o)
            for (std::size_t i = 0; i < inner; ++i) {
                Vec v(n);
                for (std::size_t t = 0; t < n; ++t) v[t] = x[(o * n + t) * inner + i];
                if (!tencode::is_zero(v)) gens.push_back(std::move(v));
            }
    return Subspace(f, n, gens);
}

bool is_rank_one(const Field& f, const Dims& dims, const Vec& x) {
    if (tencode::is_zero(x)) return false;
    for (std::size_t mode = 0; mode < dims.size(); ++mode) {
        std::size_t outer, inner;
        split(dims, mode, outer, inner);
        const std::size_t n = dims[mode];
        // every fiber must be a multiple of the first nonzero one
        Vec ref;
        for (std::size_t o = 0; o < outer; ++o)
            for (std::size_t i = 0; i < inner; ++i) {
                Vec v(n);
                for (std::size_t t = 0; t < n; ++t) v[t] = x[(o * n + t) * inner + i];
                if (tencode::is_zero(v)) continue;
                v = normalize(f, std::move(v));
                if (ref.empty()) ref = std::move(v);
                else if (v != ref) return false;
            }
    }
    return true;
}

Subspace product_space(const FieldPtr& f, const Dims& dims, const std::vector<Subspace>& parts) {
    if (parts.size() != dims.size()) throw std::invalid_argument("need one factor subspace per mode");
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (parts[i].ambient_dim() != dims[i]) throw std::invalid_argument("factor subspace has wrong ambient dimension");
    const std::size_t n = dims_size(dims);
    for (const auto& p : parts)
        if (p.dim() == 0) return Subspace::zero(f, n);
    Matrix gens{Vec{1}};
    for (const auto& p : parts) {
        Matrix next;
        for (const auto& g : gens)
            for (const auto& b : p.basis()) {
                Vec v(g.size() * b.size());
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (std::size_t j = 0; j < b.size(); ++j) v[i * b.size() + j] = f->mul(g[i], b[j]);
                next.push_back(std::move(v));
            }
        gens = std::move(next);
    }
    return Subspace(f, n, gens);
}

Subspace single_mode_space(const FieldPtr& f, const Dims& dims, std::size_t mode, const Subspace& e) {
    std::vector<Subspace> parts;
    for (std::size_t i = 0; i < dims.size(); ++i) parts.push_back(i == mode ? e : Subspace::full(f, dims[i]));
    return product_space(f, dims, parts);
}

Subspace largest_single_mode(const FieldPtr& f, const Dims& dims, const Subspace& v, std::size_t mode) {
    auto perp = v.complement();
    return fiber_span(f, dims, perp.basis(), mode).complement();
}

std::vector<RankOne> projective_rank_one(const Field& f, const Dims& dims, const Limits& limits) {
    double count = 1;
    for (auto n : dims) count *= (std::pow(double(f.q()), double(n)) - 1) / (f.q() - 1);
    if (count > double(limits.objects))
        throw BudgetExceeded("enumerating rank-one tensors exceeds the object budget");
    std::vector<std::vector<Vec>> points(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i)
        for_each_projective(f, dims[i], [&](const Vec& v) { points[i].push_back(v); });
    std::vector<RankOne> out;
    std::vector<std::size_t> idx(dims.size(), 0);
    while (true) {
        RankOne t;
        t.flat = Vec{1};
        for (std::size_t i = 0; i < dims.size(); ++i) {
            const Vec& u = points[i][idx[i]];
            t.factors.push_back(u);
            Vec next(t.flat.size() * u.size());
            for (std::size_t a = 0; a < t.flat.size(); ++a)
                for (std::size_t b = 0; b < u.size(); ++b) next[a * u.size() + b] = f.mul(t.flat[a], u[b]);
            t.flat = std::move(next);
        }
        out.push_back(std::move(t));
        std::size_t k = dims.size();
        while (k > 0 && ++idx[k - 1] == points[k - 1].size()) idx[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

} // namespace kernel

namespace {

// Incremental echelon basis used by the searches.
class Echelon {
public:
    Echelon(const Field& f, std::size_t n) : f_(&f), n_(n) {}
    std::size_t dim() const { return rows_.size(); }
    Vec reduce(Vec v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Elem c = v[piv_[i]];
            if (c) vec_axpy(*f_, v, f_->neg(c), rows_[i]);
        }
        return v;
    }
    bool add(const Vec& v) {
        Vec r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p] == 0) ++p;
        if (p == n_) return false;
        r = vec_scale(*f_, f_->inv(r[p]), r);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Elem c = rows_[i][p];
            if (c) vec_axpy(*f_, rows_[i], f_->neg(c), r);
        }
        rows_.push_back(std::move(r));
        piv_.push_back(p);
        return true;
    }

private:
    const Field* f_;
    std::size_t n_;
    Matrix rows_;
    std::vector<std::size_t> piv_;
};

double binom_d(double n, std::size_t k) {
    double r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - double(i)) / double(i + 1);
    return r < 0 ? 0 : r;
}

struct HullSearch {
    const Field& f;
    std::size_t n;
    const Limits& limits;
    std::vector<kernel::RankOne> cands;
    std::vector<std::size_t> in_s;                        // candidates inside S
    std::vector<Vec> classes;                             // normalized nonzero residues
    std::map<Vec, std::size_t> class_of;
    std::vector<std::vector<std::size_t>> members;        // candidates per class
    std::uint64_t nodes = 0;
    std::size_t lower_proven = 0;

    std::vector<std::size_t> chosen;
    std::vector<kernel::RankOne> found;

    void tick() {
        if (++nodes > limits.rank_nodes)
            throw BudgetExceeded("rank search exceeded " + std::to_string(limits.rank_nodes) + " nodes",
                                 static_cast<long long>(lower_proven));
    }

    // Is S + span(chosen classes) spanned by rank-one tensors?  R = target dim.
    bool leaf(std::size_t target) {
        tick();
        Echelon e(f, n);
        std::vector<kernel::RankOne> picked;
        auto offer = [&](std::size_t c) {
            if (e.add(cands[c].flat)) picked.push_back(cands[c]);
        };
        for (auto c : in_s) {
            offer(c);
            if (e.dim() == target) break;
        }
        const std::size_t m = chosen.size();
        if (m > 0 && e.dim() < target) {
            for_each_projective(f, m, [&](const Vec& coef) {
                if (e.dim() == target) return;
                Vec v(n, 0);
                for (std::size_t i = 0; i < m; ++i) vec_axpy(f, v, coef[i], classes[chosen[i]]);
                auto it = class_of.find(normalize(f, v));
                if (it == class_of.end()) return;
                for (auto c : members[it->second]) {
                    offer(c);
                    if (e.dim() == target) return;
                }
            });
        }
        if (e.dim() == target) {
            found = std::move(picked);
            return true;
        }
        return false;
    }

    bool dfs(std::size_t start, std::size_t left, std::size_t target, Echelon& span) {
        if (left == 0) return leaf(target);
        for (std::size_t c = start; c + left <= classes.size(); ++c) {
            tick();
            Echelon next = span;
            if (!next.add(classes[c])) continue;
            chosen.push_back(c);
            bool ok = dfs(c + 1, left - 1, target, next);
            chosen.pop_back();
            if (ok) return true;
        }
        return false;
    }
};

} // namespace

std::optional<PerfectHull> perfect_hull(const FieldPtr& fp, const Dims& dims, const Subspace& s,
                                        const Limits& limits, std::optional<std::size_t> cap,
                                        std::size_t lower) {
    const Field& f = *fp;
    const std::size_t n = dims_size(dims);
    if (s.ambient_dim() != n) throw std::invalid_argument("subspace does not live in the tensor space");
    const std::size_t w = s.dim();
    if (cap && w > *cap) return std::nullopt;
    if (dims.size() == 1) {
        PerfectHull h{w, {}};
        for (const auto& row : s.basis()) h.basis.push_back({row, {row}});
        return h;
    }

    HullSearch hs{f, n, limits, kernel::projective_rank_one(f, dims, limits), {}, {}, {}, {}, 0, 0, {}, {}};
    for (std::size_t i = 0; i < hs.cands.size(); ++i) {
        Vec r = s.reduce(hs.cands[i].flat);
        if (is_zero(r)) {
            hs.in_s.push_back(i);
            continue;
        }
        r = normalize(f, std::move(r));
        auto [it, fresh] = hs.class_of.emplace(r, hs.classes.size());
        if (fresh) {
            hs.classes.push_back(r);
            hs.members.emplace_back();
        }
        hs.members[it->second].push_back(i);
    }

    for (std::size_t target = std::max(w, lower);; ++target) {
        if (cap && target > *cap) return std::nullopt;
        hs.lower_proven = target;
        Echelon span(f, n);
        for (const auto& row : s.basis()) span.add(row);
        if (hs.dfs(0, target - w, target, span)) return PerfectHull{target, std::move(hs.found)};
        if (target >= n) throw std::logic_error("perfect hull search failed to terminate");
    }
}

std::optional<Vec> express_in(const Field& f, const std::vector<Vec>& gens, const Vec& v) {
    const std::size_t k = gens.size(), n = v.size();
    Matrix aug(n, Vec(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = gens[j][i];
        aug[i][k] = v[i];
    }
    auto r = rref(f, aug, k + 1);
    Vec c(k, 0);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivots[i] == k) return std::nullopt;
        c[r.pivots[i]] = r.rows[i][k];
    }
    return c;
}

std::size_t rank_lower_bound(const Tensor& x) {
    std::size_t lb = 0;
    for (std::size_t i = 0; i < x.order(); ++i) lb = std::max(lb, x.flattening_rank(i));
    return lb;
}

std::optional<RankResult> tensor_rank(const Tensor& x, const Limits& limits, std::optional<std::size_t> cap) {
    const Field& f = *x.field();
    const std::size_t r = x.order();
    if (x.is_zero()) return RankResult{0, {}};
    if (r == 1) {
        if (cap && *cap < 1) return std::nullopt;
        return RankResult{1, {{x.entries()}}};
    }

    std::vector<std::size_t> w(r);
    std::size_t lb = 0;
    for (std::size_t i = 0; i < r; ++i) lb = std::max(lb, w[i] = x.flattening_rank(i));
    if (cap && lb > *cap) return std::nullopt;

    // choose the slicing mode whose search tree looks smallest
    std::size_t mode = 0;
    double best = -1;
    for (std::size_t i = 0; i < r; ++i) {
        double cost = 0;
        if (r > 2) {
            double cands = 1, quot = 1;
            for (std::size_t j = 0; j < r; ++j)
                if (j != i) cands *= (std::pow(double(f.q()), double(x.dims()[j])) - 1) / (f.q() - 1);
            std::size_t ni = x.size() / x.dims()[i];
            quot = (std::pow(double(f.q()), double(ni - w[i])) - 1) / (f.q() - 1);
            double classes = std::min(cands, quot);
            for (std::size_t m = 0; m + w[i] <= lb + 1; ++m) cost += binom_d(classes, m);
            cost += cands;
        }
        if (best < 0 || cost < best || (cost == best && w[i] > w[mode])) {
            best = cost;
            mode = i;
        }
    }

    Dims rest;
    for (std::size_t j = 0; j < r; ++j)
        if (j != mode) rest.push_back(x.dims()[j]);
    auto sl = x.slices(mode);
    Subspace s(x.field(), x.size() / x.dims()[mode], sl);
    auto hull = perfect_hull(x.field(), rest, s, limits, cap, lb);
    if (!hull) return std::nullopt;

    std::vector<Vec> gens;
    for (const auto& b : hull->basis) gens.push_back(b.flat);
    const std::size_t R = gens.size();
    std::vector<Vec> coef(R, Vec(x.dims()[mode], 0));
    for (std::size_t t = 0; t < sl.size(); ++t) {
        auto c = express_in(f, gens, sl[t]);
        if (!c) throw std::logic_error("slice not in perfect hull");
        for (std::size_t i = 0; i < R; ++i) coef[i][t] = (*c)[i];
    }
    RankResult res{R, {}};
    Tensor check = Tensor::zeros(x.field(), x.dims());
    for (std::size_t i = 0; i < R; ++i) {
        std::vector<Vec> fac = hull->basis[i].factors;
        fac.insert(fac.begin() + static_cast<std::ptrdiff_t>(mode), coef[i]);
        check = check + Tensor::outer(x.field(), fac);
        res.witness.push_back(std::move(fac));
    }
    if (!(check == x)) throw std::logic_error("rank decomposition does not reconstruct the tensor");
    return res;
}

} // namespace tencode
