#pragma once

#include <cmath>
#include <cstddef>

namespace somkit {

/// A neuron's position on the square map lattice. Row-major flat indexing:
/// flat = row * side + col.
struct GridPosition {
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const GridPosition&, const GridPosition&) = default;
};

inline std::size_t to_flat_index(const GridPosition& p, std::size_t side) {
    return p.row * side + p.col;
}

inline GridPosition from_flat_index(std::size_t flat, std::size_t side) {
    return GridPosition{flat / side, flat % side};
}

/// Euclidean distance between two lattice positions.
inline double grid_distance(const GridPosition& a, const GridPosition& b) {
    const double dr = static_cast<double>(a.row) - static_cast<double>(b.row);
    const double dc = static_cast<double>(a.col) - static_cast<double>(b.col);
    return std::sqrt(dr * dr + dc * dc);
}

/// Chebyshev distance; two positions are grid-adjacent iff this is <= 1
/// (8-neighbourhood).
inline std::size_t chebyshev_distance(const GridPosition& a, const GridPosition& b) {
    const std::size_t dr = a.row > b.row ? a.row - b.row : b.row - a.row;
    const std::size_t dc = a.col > b.col ? a.col - b.col : b.col - a.col;
    return dr > dc ? dr : dc;
}

inline bool grid_adjacent(const GridPosition& a, const GridPosition& b) {
    return chebyshev_distance(a, b) <= 1;
}

}  // namespace somkit
