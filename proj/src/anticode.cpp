#include "tencode/anticode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tencode {

std::string family_name(Family f) {
    switch (f) {
    case Family::Perfect: return "perfect";
    case Family::ClosureType: return "cl";
    case Family::DualClosureType: return "dualcl";
    case Family::Delsarte: return "delsarte";
    case Family::Ravagnani: return "ravagnani";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "perfect" || s == "ps") return Family::Perfect;
    if (s == "cl" || s == "closure") return Family::ClosureType;
    if (s == "dualcl" || s == "dual-closure") return Family::DualClosureType;
    if (s == "delsarte" || s == "D") return Family::Delsarte;
    if (s == "ravagnani" || s == "R") return Family::Ravagnani;
    throw std::invalid_argument("unknown anticode family '" + s + "'");
}

Family dual_family(Family f) {
    switch (f) {
    case Family::ClosureType: return Family::DualClosureType;
    case Family::DualClosureType: return Family::ClosureType;
    case Family::Delsarte: return Family::Delsarte;
    case Family::Ravagnani: return Family::Ravagnani;
    case Family::Perfect: break;
    }
    throw std::invalid_argument("perfect spaces are not closed under duality");
}

std::vector<std::size_t> allowed_modes(Family f, const Dims& dims) {
    const auto [lo, hi] = std::minmax_element(dims.begin(), dims.end());
    std::vector<std::size_t> out;
    if (f == Family::Delsarte) {
        std::size_t nmax = 0;
        for (auto d : dims) nmax += (d == *hi);
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (nmax - (dims[i] == *hi) > 0) out.push_back(i);
    } else if (f == Family::Ravagnani) {
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i] == *lo) out.push_back(i);
    } else {
        throw std::invalid_argument("only Delsarte and Ravagnani members have a distinguished mode");
    }
    return out;
}

namespace {

bool single_mode_family(Family f) { return f == Family::Delsarte || f == Family::Ravagnani; }

void check_components(const FieldPtr& f, const Dims& dims, const std::vector<Subspace>& comps) {
    if (comps.size() != dims.size()) throw std::invalid_argument("need one component subspace per mode");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (!same_field(comps[i].field(), f)) throw std::invalid_argument("component over a different field");
        if (comps[i].ambient_dim() != dims[i]) throw std::invalid_argument("component has the wrong ambient dimension");
    }
}

std::vector<Subspace> all_zero(const FieldPtr& f, const Dims& dims) {
    std::vector<Subspace> c;
    for (auto n : dims) c.push_back(Subspace::zero(f, n));
    return c;
}

std::vector<Subspace> all_full(const FieldPtr& f, const Dims& dims) {
    std::vector<Subspace> c;
    for (auto n : dims) c.push_back(Subspace::full(f, n));
    return c;
}

void check_same_ambient(const Anticode& a, const Anticode& b) {
    if (a.family != b.family) throw std::invalid_argument("anticodes from different families");
    if (!same_field(a.field, b.field)) throw std::invalid_argument("anticodes over different fields");
    if (a.dims != b.dims) throw std::invalid_argument("anticodes of different shapes");
}

} // namespace

Anticode make_closure_type(const FieldPtr& f, const Dims& dims, std::vector<Subspace> comps) {
    check_dims(dims);
    check_components(f, dims, comps);
    for (const auto& c : comps)
        if (c.dim() == 0) return Anticode{Family::ClosureType, f, dims, all_zero(f, dims), 0, {}};
    return Anticode{Family::ClosureType, f, dims, std::move(comps), 0, {}};
}

Anticode make_dual_closure_type(const FieldPtr& f, const Dims& dims, std::vector<Subspace> comps) {
    check_dims(dims);
    check_components(f, dims, comps);
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (comps[i].dim() == dims[i]) return Anticode{Family::DualClosureType, f, dims, all_full(f, dims), 0, {}};
    return Anticode{Family::DualClosureType, f, dims, std::move(comps), 0, {}};
}

Anticode make_single_mode(Family fam, const FieldPtr& f, const Dims& dims, std::size_t mode, Subspace e) {
    check_dims(dims);
    if (!single_mode_family(fam)) throw std::invalid_argument("family has no single-mode members");
    auto modes = allowed_modes(fam, dims);
    if (mode >= dims.size() || e.ambient_dim() != dims[mode])
        throw std::invalid_argument("component has the wrong ambient dimension");
    if (!same_field(e.field(), f)) throw std::invalid_argument("component over a different field");
    if (e.dim() == 0) return make_zero(fam, f, dims);
    if (e.dim() == dims[mode]) return make_full(fam, f, dims);
    if (std::find(modes.begin(), modes.end(), mode) == modes.end())
        throw std::invalid_argument("mode " + std::to_string(mode + 1) + " is not allowed for " + family_name(fam));
    return Anticode{fam, f, dims, {std::move(e)}, mode, {}};
}

Anticode make_zero(Family fam, const FieldPtr& f, const Dims& dims) {
    switch (fam) {
    case Family::ClosureType: return Anticode{fam, f, dims, all_zero(f, dims), 0, {}};
    case Family::DualClosureType: return Anticode{fam, f, dims, all_zero(f, dims), 0, {}};
    case Family::Perfect: return Anticode{fam, f, dims, {}, 0, {}};
    default: {
        auto m = allowed_modes(fam, dims).front();
        return Anticode{fam, f, dims, {Subspace::zero(f, dims[m])}, m, {}};
    }
    }
}

Anticode make_full(Family fam, const FieldPtr& f, const Dims& dims) {
    switch (fam) {
    case Family::ClosureType: return Anticode{fam, f, dims, all_full(f, dims), 0, {}};
    case Family::DualClosureType: return Anticode{fam, f, dims, all_full(f, dims), 0, {}};
    case Family::Perfect: {
        Anticode a{fam, f, dims, {}, 0, {}};
        std::vector<Vec> basis;
        // standard basis tensors are rank one
        for (std::size_t i = 0, n = dims_size(dims); i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            a.generators.push_back(e);
        }
        return a;
    }
    default: {
        auto m = allowed_modes(fam, dims).front();
        return Anticode{fam, f, dims, {Subspace::full(f, dims[m])}, m, {}};
    }
    }
}

Subspace Anticode::space() const {
    const std::size_t n = dims_size(dims);
    switch (family) {
    case Family::ClosureType: return kernel::product_space(field, dims, components);
    case Family::DualClosureType: {
        std::vector<Subspace> perp;
        for (const auto& c : components) perp.push_back(c.complement());
        return kernel::product_space(field, dims, perp).complement();
    }
    case Family::Perfect: return Subspace(field, n, generators);
    default: return kernel::single_mode_space(field, dims, mode, components.front());
    }
}

std::size_t Anticode::dim() const {
    const std::size_t n = dims_size(dims);
    switch (family) {
    case Family::ClosureType: {
        std::size_t d = 1;
        for (const auto& c : components) d *= c.dim();
        return d;
    }
    case Family::DualClosureType: {
        std::size_t d = 1;
        for (std::size_t i = 0; i < dims.size(); ++i) d *= dims[i] - components[i].dim();
        return n - d;
    }
    case Family::Perfect: return Subspace(field, n, generators).dim();
    default: return components.front().dim() * (n / dims[mode]);
    }
}

bool Anticode::operator==(const Anticode& o) const {
    return family == o.family && same_field(field, o.field) && dims == o.dims && space() == o.space();
}

std::optional<Anticode> as_member(const Subspace& v, Family fam, const Dims& dims, const Limits& limits) {
    check_dims(dims);
    const FieldPtr& f = v.field();
    const std::size_t n = dims_size(dims);
    if (v.ambient_dim() != n) throw std::invalid_argument("subspace does not live in the tensor space");
    auto closure_of = [&](const Subspace& s) {
        std::vector<Subspace> c;
        for (std::size_t i = 0; i < dims.size(); ++i) c.push_back(kernel::fiber_span(f, dims, s.basis(), i));
        return c;
    };
    switch (fam) {
    case Family::Perfect: {
        Anticode a{fam, f, dims, {}, 0, {}};
        if (v.dim() == 0) return a;
        Matrix gens;
        auto take = [&](const Vec& x) {
            if (kernel::is_rank_one(*f, dims, x)) gens.push_back(x);
        };
        double inside = std::pow(double(f->q()), double(v.dim()));
        double cands = 1;
        for (auto d : dims) cands *= (std::pow(double(f->q()), double(d)) - 1) / (f->q() - 1);
        if (inside <= cands) {
            if (inside > double(limits.objects)) throw BudgetExceeded("perfect-space test exceeds the object budget");
            for_each_projective(*f, v.dim(), [&](const Vec& c) {
                Vec x(n, 0);
                for (std::size_t i = 0; i < c.size(); ++i) vec_axpy(*f, x, c[i], v.basis()[i]);
                take(x);
            });
        } else {
            for (const auto& t : kernel::projective_rank_one(*f, dims, limits))
                if (v.contains(t.flat)) gens.push_back(t.flat);
        }
        auto r = rref(*f, gens, n);
        if (r.rows.size() != v.dim()) return std::nullopt;
        // keep a rank-one basis rather than the echelon rows
        Matrix basis;
        Subspace acc = Subspace::zero(f, n);
        for (const auto& g : gens) {
            if (acc.contains(g)) continue;
            acc = acc.sum(Subspace(f, n, {g}));
            basis.push_back(g);
        }
        a.generators = std::move(basis);
        return a;
    }
    case Family::ClosureType: {
        if (v.dim() == 0) return make_zero(fam, f, dims);
        auto c = closure_of(v);
        auto a = make_closure_type(f, dims, c);
        if (a.dim() != v.dim()) return std::nullopt;
        return a;
    }
    case Family::DualClosureType: {
        auto w = v.complement();
        if (w.dim() == 0) return make_full(fam, f, dims);
        auto c = closure_of(w);
        auto cl = make_closure_type(f, dims, c);
        if (cl.dim() != w.dim()) return std::nullopt;
        for (auto& s : c) s = s.complement();
        return make_dual_closure_type(f, dims, c);
    }
    default: {
        if (v.dim() == 0) return make_zero(fam, f, dims);
        if (v.dim() == n) return make_full(fam, f, dims);
        auto c = closure_of(v);
        if (make_closure_type(f, dims, c).dim() != v.dim()) return std::nullopt;
        std::optional<std::size_t> proper;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (c[i].dim() == dims[i]) continue;
            if (proper) return std::nullopt;
            proper = i;
        }
        auto modes = allowed_modes(fam, dims);
        if (std::find(modes.begin(), modes.end(), *proper) == modes.end()) return std::nullopt;
        return Anticode{fam, f, dims, {c[*proper]}, *proper, {}};
    }
    }
}

Integer family_size(Family fam, const FieldPtr& f, const Dims& dims) {
    std::vector<Integer> total;
    for (auto n : dims) {
        Integer t = 0;
        for (std::size_t d = 0; d <= n; ++d) t += qbinom_count(f->q(), std::int64_t(n), std::int64_t(d));
        total.push_back(t);
    }
    switch (fam) {
    case Family::ClosureType:
    case Family::DualClosureType: {
        Integer p = 1;
        for (const auto& t : total) p *= t - 1;
        return p + 1;
    }
    case Family::Delsarte:
    case Family::Ravagnani: {
        Integer s = 2;
        for (auto m : allowed_modes(fam, dims)) s += total[m] - 2;
        return s;
    }
    case Family::Perfect: break;
    }
    throw std::invalid_argument("the perfect family has no closed-form size");
}

std::vector<Anticode> enumerate_family(Family fam, const FieldPtr& f, const Dims& dims, const Limits& limits) {
    check_dims(dims);
    std::vector<Anticode> out;
    if (fam == Family::Perfect) {
        for (const auto& s : enumerate_all_subspaces(f, dims_size(dims), limits))
            if (auto a = as_member(s, fam, dims, limits)) out.push_back(std::move(*a));
        return out;
    }
    if (family_size(fam, f, dims) > limits.objects)
        throw BudgetExceeded("anticode family has more members than the object budget");
    std::vector<std::vector<Subspace>> subs;
    for (auto n : dims) subs.push_back(enumerate_all_subspaces(f, n, limits));

    if (fam == Family::ClosureType || fam == Family::DualClosureType) {
        const bool dualcl = fam == Family::DualClosureType;
        out.push_back(dualcl ? make_full(fam, f, dims) : make_zero(fam, f, dims));
        // per mode: skip the zero space (cl) or the full space (dual cl)
        std::vector<std::vector<const Subspace*>> choice(dims.size());
        for (std::size_t i = 0; i < dims.size(); ++i)
            for (const auto& s : subs[i])
                if (dualcl ? s.dim() != dims[i] : s.dim() != 0) choice[i].push_back(&s);
        std::vector<std::size_t> idx(dims.size(), 0);
        while (true) {
            std::vector<Subspace> comps;
            for (std::size_t i = 0; i < dims.size(); ++i) comps.push_back(*choice[i][idx[i]]);
            out.push_back(Anticode{fam, f, dims, std::move(comps), 0, {}});
            std::size_t k = dims.size();
            while (k > 0 && ++idx[k - 1] == choice[k - 1].size()) idx[--k] = 0;
            if (k == 0) break;
        }
    } else {
        out.push_back(make_zero(fam, f, dims));
        out.push_back(make_full(fam, f, dims));
        for (auto m : allowed_modes(fam, dims))
            for (const auto& s : subs[m])
                if (s.dim() != 0 && s.dim() != dims[m]) out.push_back(Anticode{fam, f, dims, {s}, m, {}});
    }
    std::stable_sort(out.begin(), out.end(), [](const Anticode& a, const Anticode& b) { return a.dim() < b.dim(); });
    return out;
}

Anticode meet(const Anticode& a, const Anticode& b) {
    check_same_ambient(a, b);
    const auto& f = a.field;
    const auto& dims = a.dims;
    switch (a.family) {
    case Family::ClosureType: {
        std::vector<Subspace> c;
        for (std::size_t i = 0; i < dims.size(); ++i) c.push_back(a.components[i].intersect(b.components[i]));
        return make_closure_type(f, dims, std::move(c));
    }
    case Family::DualClosureType: {
        auto v = a.space().intersect(b.space());
        std::vector<Subspace> c;
        for (std::size_t i = 0; i < dims.size(); ++i) c.push_back(kernel::largest_single_mode(f, dims, v, i));
        return make_dual_closure_type(f, dims, std::move(c));
    }
    case Family::Perfect: {
        auto v = a.space().intersect(b.space());
        const std::size_t n = dims_size(dims);
        Matrix gens;
        for (const auto& t : kernel::projective_rank_one(*f, dims, Limits{}))
            if (v.contains(t.flat)) gens.push_back(t.flat);
        return *as_member(Subspace(f, n, gens), Family::Perfect, dims);
    }
    default: {
        const auto& ea = a.components.front();
        const auto& eb = b.components.front();
        if (ea.dim() == 0 || eb.dim() == 0) return make_zero(a.family, f, dims);
        if (ea.dim() == dims[a.mode]) return b;
        if (eb.dim() == dims[b.mode]) return a;
        if (a.mode != b.mode) return make_zero(a.family, f, dims);
        return make_single_mode(a.family, f, dims, a.mode, ea.intersect(eb));
    }
    }
}

Anticode join(const Anticode& a, const Anticode& b) {
    check_same_ambient(a, b);
    const auto& f = a.field;
    const auto& dims = a.dims;
    switch (a.family) {
    case Family::ClosureType: {
        if (a.dim() == 0) return b;
        if (b.dim() == 0) return a;
        std::vector<Subspace> c;
        for (std::size_t i = 0; i < dims.size(); ++i) c.push_back(a.components[i].sum(b.components[i]));
        return make_closure_type(f, dims, std::move(c));
    }
    case Family::DualClosureType: {
        std::vector<Subspace> c;
        for (std::size_t i = 0; i < dims.size(); ++i) c.push_back(a.components[i].sum(b.components[i]));
        return make_dual_closure_type(f, dims, std::move(c));
    }
    case Family::Perfect: {
        Anticode j = a;
        j.generators.insert(j.generators.end(), b.generators.begin(), b.generators.end());
        return *as_member(j.space(), Family::Perfect, dims);
    }
    default: {
        const auto& ea = a.components.front();
        const auto& eb = b.components.front();
        if (ea.dim() == 0) return b;
        if (eb.dim() == 0) return a;
        if (ea.dim() == dims[a.mode] || eb.dim() == dims[b.mode]) return make_full(a.family, f, dims);
        if (a.mode != b.mode) return make_full(a.family, f, dims);
        return make_single_mode(a.family, f, dims, a.mode, ea.sum(eb));
    }
    }
}

Anticode dual(const Anticode& a) {
    std::vector<Subspace> perp;
    for (const auto& c : a.components) perp.push_back(c.complement());
    switch (a.family) {
    case Family::ClosureType: return make_dual_closure_type(a.field, a.dims, std::move(perp));
    case Family::DualClosureType: return make_closure_type(a.field, a.dims, std::move(perp));
    case Family::Delsarte:
    case Family::Ravagnani: return make_single_mode(a.family, a.field, a.dims, a.mode, std::move(perp.front()));
    case Family::Perfect: break;
    }
    throw std::invalid_argument("perfect spaces are not closed under duality");
}

std::size_t intersection_dim(const TensorCode& c, const Anticode& a) {
    if (!same_field(c.field(), a.field) || c.dims() != a.dims)
        throw std::invalid_argument("code and anticode live in different spaces");
    const Field& f = *c.field();
    const auto& dims = c.dims();
    const auto& basis = c.space().basis();
    const std::size_t k = basis.size();
    if (k == 0) return 0;
    Matrix checks(k);
    auto add_mode = [&](std::size_t mode, const Subspace& comp) {
        if (comp.dim() == dims[mode]) return;
        auto perp = comp.complement();
        for (std::size_t b = 0; b < k; ++b)
            for (const auto& h : perp.basis()) {
                auto y = kernel::contract(f, dims, basis[b], mode, h);
                checks[b].insert(checks[b].end(), y.begin(), y.end());
            }
    };
    switch (a.family) {
    case Family::ClosureType:
        if (a.dim() == 0) return 0;
        for (std::size_t i = 0; i < dims.size(); ++i) add_mode(i, a.components[i]);
        break;
    case Family::Delsarte:
    case Family::Ravagnani:
        add_mode(a.mode, a.components.front());
        break;
    case Family::DualClosureType: {
        std::vector<Subspace> perp;
        for (const auto& comp : a.components) perp.push_back(comp.complement());
        auto h = kernel::product_space(a.field, dims, perp);
        for (std::size_t b = 0; b < k; ++b)
            for (const auto& row : h.basis()) checks[b].push_back(dot(f, basis[b], row));
        break;
    }
    case Family::Perfect:
        return intersection_dim(c, a.space());
    }
    const std::size_t width = checks[0].size();
    if (width == 0) return k;
    return k - matrix_rank(f, checks, width);
}

} // namespace tencode
