#include "somkit/normalize.hpp"

#include <algorithm>
#include <string>

#include "somkit/errors.hpp"

namespace somkit {

namespace {

void check_dim(std::size_t have, std::size_t want, const char* where) {
    if (have != want) {
        throw DataError(std::string(where) + ": dimension mismatch: " + std::to_string(have) +
                        " vs fitted " + std::to_string(want));
    }
}

}  // namespace

NormalizationParams fit_normalization(const Dataset& ds) {
    if (ds.rows.empty()) {
        throw DataError("fit_normalization: empty dataset");
    }
    const std::size_t n = ds.dim();
    NormalizationParams p;
    p.mins.assign(ds.rows[0].begin(), ds.rows[0].end());
    p.maxs.assign(ds.rows[0].begin(), ds.rows[0].end());
    for (const auto& row : ds.rows) {
        for (std::size_t c = 0; c < n; ++c) {
            p.mins[c] = std::min(p.mins[c], row[c]);
            p.maxs[c] = std::max(p.maxs[c], row[c]);
        }
    }
    p.degenerate.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        p.degenerate[c] = p.mins[c] == p.maxs[c];
    }
    return p;
}

std::vector<double> normalize_vector(const std::vector<double>& v,
                                     const NormalizationParams& p) {
    check_dim(v.size(), p.dim(), "normalize");
    std::vector<double> out(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) {
        out[c] = p.degenerate[c] ? 0.0 : (v[c] - p.mins[c]) / (p.maxs[c] - p.mins[c]);
    }
    return out;
}

Dataset normalize(const Dataset& ds, const NormalizationParams& p) {
    check_dim(ds.dim(), p.dim(), "normalize");
    Dataset out;
    out.labels = ds.labels;
    out.column_names = ds.column_names;
    out.rows.reserve(ds.rows.size());
    for (const auto& row : ds.rows) {
        out.rows.push_back(normalize_vector(row, p));
    }
    return out;
}

std::vector<double> denormalize(const std::vector<double>& v, const NormalizationParams& p) {
    check_dim(v.size(), p.dim(), "denormalize");
    std::vector<double> out(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) {
        out[c] = p.degenerate[c] ? p.mins[c] : v[c] * (p.maxs[c] - p.mins[c]) + p.mins[c];
    }
    return out;
}

}  // namespace somkit
