#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tencode/subspace.hpp"
#include "tencode/tensor.hpp"

namespace tencode {

/// Linear subspace of F^{n_1} x ... x F^{n_r}.
class TensorCode {
public:
    TensorCode(FieldPtr f, Dims dims, const std::vector<Tensor>& generators);
    TensorCode(Dims dims, Subspace space);

    const FieldPtr& field() const { return space_.field(); }
    const Dims& dims() const { return dims_; }
    std::size_t length() const { return space_.ambient_dim(); }
    std::size_t dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }
    /// RREF basis as tensors.
    std::vector<Tensor> basis() const;
    Tensor codeword(const Vec& coeffs) const;

    TensorCode dual() const { return TensorCode(dims_, space_.complement()); }
    /// cl(C): the fiber spans of all codewords, one subspace per mode.
    std::vector<Subspace> closure() const;
    /// The (r+1)-tensor whose last-mode slices are the basis codewords.
    Tensor stacked() const;

    bool operator==(const TensorCode& o) const { return dims_ == o.dims_ && space_ == o.space_; }

private:
    Dims dims_;
    Subspace space_;
};

/// Calls fn(coeffs, codeword) for each projective nonzero codeword.
void for_each_projective_codeword(const TensorCode& c, const Limits& limits,
                                  const std::function<void(const Vec&, const Tensor&)>& fn);

/// Minimum tensor rank of a nonzero codeword.
std::size_t min_distance(const TensorCode& c, const Limits& limits = Limits{});
/// Maximum tensor rank of a codeword.
std::size_t max_rank(const TensorCode& c, const Limits& limits = Limits{});
/// Tensor rank of the code: rank of stacked().
RankResult code_tensor_rank(const TensorCode& c, const Limits& limits = Limits{});

struct CodeParams {
    Dims dims;
    std::size_t length = 0;
    std::size_t dim = 0;
    std::optional<std::size_t> min_distance; ///< undefined for the zero code
    std::size_t max_rank = 0;
    std::size_t tensor_rank = 0;
};
CodeParams code_params(const TensorCode& c, const Limits& limits = Limits{});

/// dim(C ∩ V) for an arbitrary subspace V of the ambient space.
std::size_t intersection_dim(const TensorCode& c, const Subspace& v);

} // namespace tencode
