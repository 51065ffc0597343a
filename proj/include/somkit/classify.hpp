#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "somkit/dataset.hpp"
#include "somkit/model.hpp"

namespace somkit {

struct SampleAssignment {
    std::size_t sample_index = 0;
    GridPosition position;
    double bmu_distance = 0.0;
    std::string label;  // empty when the dataset had no labels
};

/// Result of mapping a dataset onto a trained model: one BMU per sample,
/// plus how often each neuron won, indexed by flat position.
struct Assignments {
    std::size_t side = 0;
    std::vector<SampleAssignment> items;
    std::vector<std::uint64_t> activation_counts;  // side*side entries

    std::size_t sample_count() const { return items.size(); }
};

/// Map every row of `ds` (raw units) onto the model: normalize with the
/// model's stored parameters, then winner search. Weights are never touched.
/// Out-of-range values are not clamped.
Assignments classify(const SomModel& model, const Dataset& ds);

/// How many neurons won exactly N samples, for each N that occurs
/// (the zero bucket included).
std::map<std::uint64_t, std::size_t> activation_histogram(const Assignments& a);

/// CSV with header sample_index,row,col,flat_index,bmu_distance,label.
void write_assignments_csv(const Assignments& a, const std::filesystem::path& path);

/// Inverse of write_assignments_csv. `side` is the owning model's side;
/// positions are validated against it.
Assignments read_assignments_csv(const std::filesystem::path& path, std::size_t side);

}  // namespace somkit
