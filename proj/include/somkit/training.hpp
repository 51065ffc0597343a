#pragma once

#include <filesystem>
#include <vector>

#include "somkit/dataset.hpp"
#include "somkit/model.hpp"

namespace somkit {

/// Snapshot of the schedule state and map fit, recorded every
/// max(1, P/100) presentations (before the update at that step).
struct TraceCheckpoint {
    std::uint64_t t = 0;
    double alpha = 0.0;
    double sigma = 0.0;
    double quantization_error = 0.0;
};

struct TrainingTrace {
    std::vector<TraceCheckpoint> checkpoints;
};

/// Columns: t,alpha,sigma,quantization_error.
void write_trace_csv(const TrainingTrace& trace, const std::filesystem::path& path);

/// Linear decay: alpha(t) = alpha0 * (1 - t/P). Positive for every t < P.
double learning_rate_at(std::uint64_t t, const TrainingConfig& cfg);

/// Linear decay towards 1: sigma(t) = 1 + (sigma0 - 1) * (1 - t/P).
double radius_at(std::uint64_t t, const TrainingConfig& cfg);

/// Gaussian kernel over lattice distance: exp(-d^2 / (2 sigma^2)).
/// Equals 1 exactly when node == bmu.
double neighborhood_coefficient(const GridPosition& bmu, const GridPosition& node,
                                double sigma);

/// One presentation: find the BMU of `sample` and pull every node towards it,
/// weighted by the neighbourhood kernel at schedule step t. Nodes whose
/// coefficient falls below 1e-6 are skipped.
void update_step(WeightMatrix& wm, const std::vector<double>& sample, std::uint64_t t,
                 const TrainingConfig& cfg);

struct TrainingResult {
    SomModel model;
    TrainingTrace trace;
};

/// Run the full self-organization loop on a normalized dataset: seeded
/// uniform initialization, then cfg.presentations single-pattern updates.
/// `norm` must be the parameters the dataset was normalized with; it is
/// stored in the model so classification can reuse it. Deterministic: the
/// same (dataset, norm, cfg) always produces a bitwise-identical model.
TrainingResult train(const Dataset& normalized, const NormalizationParams& norm,
                     const TrainingConfig& cfg);

}  // namespace somkit
