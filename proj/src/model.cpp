#include "somkit/model.hpp"

#include <string>

#include "somkit/errors.hpp"

namespace somkit {

SomModel::SomModel(WeightMatrix weights, NormalizationParams normalization, TrainingMeta meta)
    : weights_(std::move(weights)),
      normalization_(std::move(normalization)),
      meta_(std::move(meta)) {
    if (normalization_.dim() != weights_.dim()) {
        throw DataError("model: normalization dimension " +
                        std::to_string(normalization_.dim()) +
                        " does not match weight dimension " + std::to_string(weights_.dim()));
    }
    if (meta_.presentations_completed > meta_.config.presentations) {
        throw DataError("model: presentations_completed exceeds configured presentations");
    }
}

}  // namespace somkit
