#pragma once

#include "somkit/config.hpp"
#include "somkit/normalize.hpp"
#include "somkit/weights.hpp"

namespace somkit {

struct TrainingMeta {
    TrainingConfig config;
    std::uint64_t presentations_completed = 0;

    friend bool operator==(const TrainingMeta&, const TrainingMeta&) = default;
};

/// A trained map plus everything needed to use it: the codebook, the
/// normalization fitted on the training data, and the training metadata.
/// Immutable once constructed; all read operations are thread-safe.
class SomModel {
public:
    SomModel(WeightMatrix weights, NormalizationParams normalization, TrainingMeta meta);

    std::size_t side() const { return weights_.side(); }
    std::size_t dim() const { return weights_.dim(); }
    const WeightMatrix& weights() const { return weights_; }
    const NormalizationParams& normalization() const { return normalization_; }
    const TrainingMeta& meta() const { return meta_; }

    friend bool operator==(const SomModel&, const SomModel&) = default;

private:
    WeightMatrix weights_;
    NormalizationParams normalization_;
    TrainingMeta meta_;
};

}  // namespace somkit
