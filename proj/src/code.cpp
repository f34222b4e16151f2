#include "tencode/code.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tencode {

TensorCode::TensorCode(FieldPtr f, Dims dims, const std::vector<Tensor>& generators)
    : dims_(std::move(dims)), space_(Subspace::zero(f, dims_size(dims_))) {
    check_dims(dims_);
    Matrix gens;
    for (const auto& g : generators) {
        if (!same_field(g.field(), f)) throw std::invalid_argument("generator over a different field");
        if (g.dims() != dims_) throw std::invalid_argument("generator shape does not match the code shape");
        gens.push_back(g.entries());
    }
    space_ = Subspace(f, dims_size(dims_), gens);
}

TensorCode::TensorCode(Dims dims, Subspace space) : dims_(std::move(dims)), space_(std::move(space)) {
    check_dims(dims_);
    if (space_.ambient_dim() != dims_size(dims_)) throw std::invalid_argument("subspace does not match the code shape");
}

std::vector<Tensor> TensorCode::basis() const {
    std::vector<Tensor> out;
    for (const auto& row : space_.basis()) out.emplace_back(field(), dims_, row);
    return out;
}

Tensor TensorCode::codeword(const Vec& coeffs) const {
    if (coeffs.size() != dim()) throw std::invalid_argument("coefficient vector has wrong length");
    Vec v(length(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) vec_axpy(*field(), v, coeffs[i], space_.basis()[i]);
    return Tensor(field(), dims_, std::move(v));
}

std::vector<Subspace> TensorCode::closure() const {
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < dims_.size(); ++i) out.push_back(kernel::fiber_span(field(), dims_, space_.basis(), i));
    return out;
}

Tensor TensorCode::stacked() const {
    const std::size_t k = dim(), n = length();
    Dims d = dims_;
    d.push_back(k);
    Vec e(n * k);
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t i = 0; i < n; ++i) e[i * k + b] = space_.basis()[b][i];
    return Tensor(field(), d, std::move(e));
}

void for_each_projective_codeword(const TensorCode& c, const Limits& limits,
                                  const std::function<void(const Vec&, const Tensor&)>& fn) {
    double count = (std::pow(double(c.field()->q()), double(c.dim())) - 1) / (c.field()->q() - 1);
    if (count > double(limits.objects)) throw BudgetExceeded("enumerating codewords exceeds the object budget");
    for_each_projective(*c.field(), c.dim(), [&](const Vec& coef) { fn(coef, c.codeword(coef)); });
}

std::size_t min_distance(const TensorCode& c, const Limits& limits) {
    if (c.dim() == 0) throw std::invalid_argument("the zero code has no minimum distance");
    std::vector<std::pair<std::size_t, Tensor>> words;
    for_each_projective_codeword(c, limits, [&](const Vec&, const Tensor& x) { words.emplace_back(rank_lower_bound(x), x); });
    std::stable_sort(words.begin(), words.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t best = SIZE_MAX;
    for (const auto& [lb, x] : words) {
        if (lb >= best) break;
        std::optional<std::size_t> cap;
        if (best != SIZE_MAX) cap = best - 1;
        if (auto r = tensor_rank(x, limits, cap)) best = r->rank;
    }
    return best;
}

std::size_t max_rank(const TensorCode& c, const Limits& limits) {
    std::size_t best = 0;
    if (c.dim() == 0) return 0;
    for_each_projective_codeword(c, limits, [&](const Vec&, const Tensor& x) {
        best = std::max(best, tensor_rank(x, limits)->rank);
    });
    return best;
}

RankResult code_tensor_rank(const TensorCode& c, const Limits& limits) {
    if (c.dim() == 0) return RankResult{0, {}};
    return *tensor_rank(c.stacked(), limits);
}

CodeParams code_params(const TensorCode& c, const Limits& limits) {
    CodeParams p;
    p.dims = c.dims();
    p.length = c.length();
    p.dim = c.dim();
    if (c.dim() > 0) p.min_distance = min_distance(c, limits);
    p.max_rank = max_rank(c, limits);
    p.tensor_rank = code_tensor_rank(c, limits).rank;
    return p;
}

std::size_t intersection_dim(const TensorCode& c, const Subspace& v) {
    return c.dim() + v.dim() - c.space().sum(v).dim();
}

} // namespace tencode
