#pragma once

#include <optional>
#include <string>
#include <vector>

#include "somkit/classify.hpp"
#include "somkit/dataset.hpp"
#include "somkit/model.hpp"

namespace somkit {

/// Mean distance from each sample (normalized with the model's parameters)
/// to its BMU weight vector.
double quantization_error(const SomModel& model, const Dataset& ds);

/// Fraction of samples whose first and second BMUs are not grid-adjacent
/// (Chebyshev distance > 1). Needs at least two neurons.
double topographic_error(const SomModel& model, const Dataset& ds);

/// Fraction of neurons that won at least one sample.
double activation_density(const Assignments& a);

/// Per-neuron mean Euclidean weight distance to its existing lattice
/// neighbours (8-neighbourhood), flat-indexed. A single-neuron map yields {0}.
std::vector<double> u_matrix(const SomModel& model);

struct NeuronReport {
    GridPosition position;
    std::uint64_t activation_count = 0;
    double mean_bmu_distance = 0.0;  // 0 when the neuron won no samples
    std::vector<double> weights;     // raw units (denormalized)
    std::optional<std::string> majority_label;
    std::optional<double> purity;    // majority count / activation count
};

struct MapReport {
    std::size_t side = 0;
    double quantization_error = 0.0;
    double topographic_error = 0.0;
    double activation_density = 0.0;
    std::vector<NeuronReport> per_neuron;  // ordered by flat index, side*side entries
};

/// Aggregate the metrics above plus per-neuron statistics. `a` must have been
/// produced from this model and dataset. Majority-label ties break to the
/// lexicographically smallest label.
MapReport build_report(const SomModel& model, const Assignments& a, const Dataset& ds);

/// JSON document: {"metrics": {...}, "per_neuron": [...]}.
std::string report_to_json(const MapReport& report);

/// Fixed-width table for terminal output.
std::string report_to_text(const MapReport& report);

}  // namespace somkit
