#include "tencode/subspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tencode/qcomb.hpp"

namespace tencode {

RrefResult rref(const Field& f, Matrix m, std::size_t n) {
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("row length " + std::to_string(row.size()) + " != " + std::to_string(n));
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Elem s = f.inv(m[r][c]);
        if (s != 1)
            for (std::size_t j = c; j < n; ++j) m[r][j] = f.mul(m[r][j], s);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Elem fac = f.neg(m[i][c]);
            for (std::size_t j = c; j < n; ++j) m[i][j] = f.add(m[i][j], f.mul(fac, m[r][j]));
        }
        res.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    res.rows = std::move(m);
    return res;
}

std::size_t matrix_rank(const Field& f, Matrix m, std::size_t n) { return rref(f, std::move(m), n).rows.size(); }

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& f, Elem c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

void vec_axpy(const Field& f, Vec& a, Elem c, const Vec& b) {
    if (c == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(c, b[i]));
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Vec normalize(const Field& f, Vec v) {
    for (Elem e : v) {
        if (e == 0) continue;
        if (e != 1) {
            Elem s = f.inv(e);
            for (auto& x : v) x = f.mul(x, s);
        }
        break;
    }
    return v;
}

Matrix null_space(const Field& f, const Matrix& m, std::size_t n) {
    auto r = rref(f, m, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    Matrix out;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec x(n, 0);
        x[c] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i) x[r.pivots[i]] = f.neg(r.rows[i][c]);
        out.push_back(std::move(x));
    }
    return out;
}

Subspace::Subspace(FieldPtr f, std::size_t n, const Matrix& generators) : f_(std::move(f)), n_(n) {
    if (!f_) throw std::invalid_argument("null field");
    for (const auto& row : generators)
        for (Elem e : row)
            if (e >= f_->q()) throw std::invalid_argument("entry out of range for " + f_->describe());
    auto r = rref(*f_, generators, n);
    basis_ = std::move(r.rows);
    pivots_ = std::move(r.pivots);
}

Subspace::Subspace(FieldPtr f, std::size_t n, RrefResult r)
    : f_(std::move(f)), n_(n), basis_(std::move(r.rows)), pivots_(std::move(r.pivots)) {}

Subspace Subspace::zero(FieldPtr f, std::size_t n) { return Subspace(std::move(f), n, Matrix{}); }

Subspace Subspace::full(FieldPtr f, std::size_t n) {
    Matrix id(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return Subspace(std::move(f), n, id);
}

void Subspace::check(const Subspace& o) const {
    if (!same_field(f_, o.f_)) throw std::invalid_argument("subspaces over different fields");
    if (n_ != o.n_) throw std::invalid_argument("subspaces of different ambient dimension");
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match ambient dimension");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Elem c = v[pivots_[i]];
        if (c) vec_axpy(*f_, v, f_->neg(c), basis_[i]);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    check(o);
    if (o.dim() > dim()) return false;
    for (const auto& row : o.basis_)
        if (!contains(row)) return false;
    return true;
}

Vec Subspace::coordinates(const Vec& v) const {
    Vec c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    Vec w(n_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) vec_axpy(*f_, w, c[i], basis_[i]);
    if (w != v) throw std::invalid_argument("vector is not in the subspace");
    return c;
}

Subspace Subspace::sum(const Subspace& o) const {
    check(o);
    Matrix g = basis_;
    g.insert(g.end(), o.basis_.begin(), o.basis_.end());
    return Subspace(f_, n_, g);
}

Subspace Subspace::complement() const {
    Matrix ns = null_space(*f_, basis_, n_);
    return Subspace(f_, n_, ns);
}

Subspace Subspace::intersect(const Subspace& o) const {
    check(o);
    return complement().sum(o.complement()).complement();
}

bool Subspace::operator==(const Subspace& o) const {
    return same_field(f_, o.f_) && n_ == o.n_ && basis_ == o.basis_;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_ < o.basis_;
}

void for_each_subspace(const FieldPtr& f, std::size_t n, std::size_t d,
                       const std::function<void(const Subspace&)>& fn) {
    if (d > n) return;
    const int q = f->q();
    std::vector<std::size_t> piv(d);
    for (std::size_t i = 0; i < d; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (auto c : piv) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free.emplace_back(r, c);
        Matrix m(d, Vec(n, 0));
        for (std::size_t r = 0; r < d; ++r) m[r][piv[r]] = 1;
        std::vector<int> odo(free.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free.size(); ++i)
                m[free[i].first][free[i].second] = static_cast<Elem>(odo[i]);
            fn(Subspace(f, n, m));
            std::size_t i = 0;
            while (i < odo.size() && ++odo[i] == q) odo[i++] = 0;
            if (i == odo.size()) break;
        }
        // next pivot combination
        std::size_t i = d;
        while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& f, std::size_t n, std::size_t d, const Limits& limits) {
    Integer count = qbinom_count(f->q(), static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    if (count > limits.objects)
        throw BudgetExceeded("enumerating " + count.str() + " subspaces exceeds the object budget");
    std::vector<Subspace> out;
    for_each_subspace(f, n, d, [&](const Subspace& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_all_subspaces(const FieldPtr& f, std::size_t n, const Limits& limits) {
    Integer count = 0;
    for (std::size_t d = 0; d <= n; ++d)
        count += qbinom_count(f->q(), static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    if (count > limits.objects)
        throw BudgetExceeded("enumerating " + count.str() + " subspaces exceeds the object budget");
    std::vector<Subspace> out;
    for (std::size_t d = 0; d <= n; ++d) {
        auto part = enumerate_subspaces(f, n, d, limits);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

void for_each_projective(const Field& f, std::size_t k, const std::function<void(const Vec&)>& fn) {
    const int q = f.q();
    for (std::size_t lead = 0; lead < k; ++lead) {
        Vec v(k, 0);
        v[lead] = 1;
        std::size_t tail = k - lead - 1;
        std::vector<int> odo(tail, 0);
        while (true) {
            for (std::size_t i = 0; i < tail; ++i) v[lead + 1 + i] = static_cast<Elem>(odo[i]);
            fn(v);
            std::size_t i = 0;
            while (i < tail && ++odo[i] == q) odo[i++] = 0;
            if (i == tail) break;
        }
    }
}

} // namespace tencode
