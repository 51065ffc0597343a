#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "somkit/grid.hpp"

namespace somkit {

/// The codebook: one weight vector of dimension `dim` per lattice node,
/// stored row-major by flat index.
class WeightMatrix {
public:
    WeightMatrix() = default;
    WeightMatrix(std::size_t side, std::size_t dim);

    std::size_t side() const { return side_; }
    std::size_t dim() const { return dim_; }
    std::size_t neuron_count() const { return side_ * side_; }

    std::span<double> row(std::size_t flat) {
        return {data_.data() + flat * dim_, dim_};
    }
    std::span<const double> row(std::size_t flat) const {
        return {data_.data() + flat * dim_, dim_};
    }
    std::span<const double> at(const GridPosition& p) const {
        return row(to_flat_index(p, side_));
    }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    std::size_t side_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

struct BmuResult {
    GridPosition position;
    double distance = 0.0;
};

/// sqrt of the per-component sum of squares. Throws std::invalid_argument on
/// dimension mismatch, naming both dimensions.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Winner search over the whole codebook. Ties break to the smallest flat
/// index, so the result is a pure function of the matrix contents.
BmuResult find_bmu(std::span<const double> sample, const WeightMatrix& wm);

/// First and second winners (same tie-break); the two positions always
/// differ. Requires at least two neurons.
std::pair<GridPosition, GridPosition> find_two_bmus(std::span<const double> sample,
                                                    const WeightMatrix& wm);

/// Seeded uniform [0,1) initialization; same (side, dim, seed) gives a
/// bitwise-identical matrix.
WeightMatrix init_weights(std::size_t side, std::size_t dim, std::uint64_t seed);

/// Mean BMU distance of `rows` against `wm`. The quantization-error kernel;
/// rows must already live in the same space as the weights.
double mean_bmu_distance(const WeightMatrix& wm,
                         const std::vector<std::vector<double>>& rows);

}  // namespace somkit
