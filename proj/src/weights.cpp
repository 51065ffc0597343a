#include "somkit/weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "somkit/rng.hpp"

namespace somkit {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void check_dims(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
}

}  // namespace

WeightMatrix::WeightMatrix(std::size_t side, std::size_t dim)
    : side_(side), dim_(dim), data_(side * side * dim, 0.0) {}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    check_dims(a, b);
    return std::sqrt(squared_distance(a, b));
}

BmuResult find_bmu(std::span<const double> sample, const WeightMatrix& wm) {
    if (wm.neuron_count() == 0) {
        throw std::invalid_argument("find_bmu: empty weight matrix");
    }
    check_dims(sample, wm.row(0));

    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < wm.neuron_count(); ++j) {
        const double d2 = squared_distance(sample, wm.row(j));
        if (d2 < best_d2) {
            best_d2 = d2;
            best = j;
        }
    }
    return {from_flat_index(best, wm.side()), std::sqrt(best_d2)};
}

std::pair<GridPosition, GridPosition> find_two_bmus(std::span<const double> sample,
                                                    const WeightMatrix& wm) {
    if (wm.neuron_count() < 2) {
        throw std::invalid_argument("find_two_bmus: need at least 2 neurons, have " +
                                    std::to_string(wm.neuron_count()));
    }
    check_dims(sample, wm.row(0));

    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::size_t best = kNone;
    std::size_t second = kNone;
    double best_d2 = std::numeric_limits<double>::infinity();
    double second_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < wm.neuron_count(); ++j) {
        const double d2 = squared_distance(sample, wm.row(j));
        if (d2 < best_d2) {
            second = best;
            second_d2 = best_d2;
            best = j;
            best_d2 = d2;
        } else if (d2 < second_d2) {
            second = j;
            second_d2 = d2;
        }
    }
    return {from_flat_index(best, wm.side()), from_flat_index(second, wm.side())};
}

WeightMatrix init_weights(std::size_t side, std::size_t dim, std::uint64_t seed) {
    if (side == 0 || dim == 0) {
        throw std::invalid_argument("init_weights: side and dim must be >= 1");
    }
    WeightMatrix wm(side, dim);
    Rng rng(seed);
    for (double& v : wm.data()) {
        v = rng.uniform01();
    }
    return wm;
}

double mean_bmu_distance(const WeightMatrix& wm,
                         const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("mean_bmu_distance: empty sample set");
    }
    double acc = 0.0;
    for (const auto& r : rows) {
        acc += find_bmu(r, wm).distance;
    }
    return acc / static_cast<double>(rows.size());
}

}  // namespace somkit
