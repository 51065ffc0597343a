#pragma once

#include <vector>

#include "somkit/dataset.hpp"

namespace somkit {

/// Per-feature min-max ranges fitted on a training set. A feature is
/// degenerate when min == max; such features normalize to 0.0 and
/// denormalize back to the constant.
struct NormalizationParams {
    std::vector<double> mins;
    std::vector<double> maxs;
    std::vector<bool> degenerate;

    std::size_t dim() const { return mins.size(); }

    friend bool operator==(const NormalizationParams&, const NormalizationParams&) = default;
};

NormalizationParams fit_normalization(const Dataset& ds);

/// Map each value to (v - min) / (max - min). Values outside the fitted range
/// are mapped by the same affine formula, not clamped. Labels pass through.
Dataset normalize(const Dataset& ds, const NormalizationParams& p);

std::vector<double> normalize_vector(const std::vector<double>& v,
                                     const NormalizationParams& p);

/// Inverse of normalize_vector per feature.
std::vector<double> denormalize(const std::vector<double>& v, const NormalizationParams& p);

}  // namespace somkit
