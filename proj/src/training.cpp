#include "somkit/training.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "somkit/detail/format.hpp"
#include "somkit/errors.hpp"
#include "somkit/rng.hpp"

namespace somkit {

using detail::format_double;

namespace {

constexpr double kNeighborhoodCutoff = 1e-6;

void check_step(std::uint64_t t, const TrainingConfig& cfg) {
    if (t >= cfg.presentations) {
        throw std::invalid_argument("schedule step " + std::to_string(t) +
                                    " out of range: P = " + std::to_string(cfg.presentations));
    }
}

}  // namespace

std::string to_string(SamplingMode mode) {
    return mode == SamplingMode::Cyclic ? "cyclic" : "random";
}

SamplingMode sampling_mode_from_string(const std::string& s) {
    if (s == "cyclic") return SamplingMode::Cyclic;
    if (s == "random") return SamplingMode::UniformRandom;
    throw ConfigError("unknown sampling mode '" + s + "' (expected cyclic or random)");
}

void TrainingConfig::validate() const {
    if (side < 1) throw ConfigError("side must be >= 1");
    if (presentations < 1) throw ConfigError("presentations must be >= 1");
    if (!(initial_learning_rate > 0.0) || initial_learning_rate > 1.0) {
        throw ConfigError("learning rate must be in (0, 1], got " +
                          format_double(initial_learning_rate));
    }
    if (!(initial_radius >= 1.0)) {
        throw ConfigError("radius must be >= 1, got " + format_double(initial_radius));
    }
}

double learning_rate_at(std::uint64_t t, const TrainingConfig& cfg) {
    check_step(t, cfg);
    const double frac = static_cast<double>(t) / static_cast<double>(cfg.presentations);
    return cfg.initial_learning_rate * (1.0 - frac);
}

double radius_at(std::uint64_t t, const TrainingConfig& cfg) {
    check_step(t, cfg);
    const double frac = static_cast<double>(t) / static_cast<double>(cfg.presentations);
    return 1.0 + (cfg.initial_radius - 1.0) * (1.0 - frac);
}

double neighborhood_coefficient(const GridPosition& bmu, const GridPosition& node,
                                double sigma) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("sigma must be positive");
    }
    const double d = grid_distance(bmu, node);
    return std::exp(-(d * d) / (2.0 * sigma * sigma));
}

void update_step(WeightMatrix& wm, const std::vector<double>& sample, std::uint64_t t,
                 const TrainingConfig& cfg) {
    check_step(t, cfg);
    const double alpha = learning_rate_at(t, cfg);
    const double sigma = radius_at(t, cfg);
    const GridPosition bmu = find_bmu(sample, wm).position;

    for (std::size_t j = 0; j < wm.neuron_count(); ++j) {
        const GridPosition node = from_flat_index(j, wm.side());
        const double h = neighborhood_coefficient(bmu, node, sigma);
        if (h < kNeighborhoodCutoff) continue;
        const double step = alpha * h;
        auto w = wm.row(j);
        for (std::size_t c = 0; c < w.size(); ++c) {
            w[c] += step * (sample[c] - w[c]);
        }
    }
}

TrainingResult train(const Dataset& normalized, const NormalizationParams& norm,
                     const TrainingConfig& cfg) {
    cfg.validate();
    if (normalized.rows.empty()) {
        throw DataError("train: empty dataset");
    }
    const std::size_t dim = normalized.dim();
    if (norm.dim() != dim) {
        throw DataError("train: normalization dimension " + std::to_string(norm.dim()) +
                        " does not match dataset dimension " + std::to_string(dim));
    }
    for (std::size_t i = 0; i < normalized.rows.size(); ++i) {
        const auto& row = normalized.rows[i];
        if (row.size() != dim) {
            throw DataError("train: row " + std::to_string(i) + " has dimension " +
                            std::to_string(row.size()) + ", expected " + std::to_string(dim));
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!(row[c] >= 0.0 && row[c] <= 1.0)) {
                throw DataError("train: value " + format_double(row[c]) + " at row " +
                                std::to_string(i) + ", feature " + std::to_string(c) +
                                " is outside [0, 1]; pass normalized data");
            }
        }
    }

    // Independent streams for initialization and sampling, both derived from
    // the single user-facing seed.
    std::uint64_t seed_state = cfg.seed;
    const std::uint64_t init_seed = splitmix64(seed_state);
    const std::uint64_t sampling_seed = splitmix64(seed_state);

    WeightMatrix wm = init_weights(cfg.side, dim, init_seed);
    Rng sampler(sampling_seed);

    const std::uint64_t checkpoint_every =
        std::max<std::uint64_t>(1, cfg.presentations / 100);
    const std::size_t n_rows = normalized.rows.size();

    TrainingTrace trace;
    for (std::uint64_t t = 0; t < cfg.presentations; ++t) {
        if (t % checkpoint_every == 0) {
            trace.checkpoints.push_back({t, learning_rate_at(t, cfg), radius_at(t, cfg),
                                         mean_bmu_distance(wm, normalized.rows)});
        }
        const std::size_t idx = cfg.sampling == SamplingMode::Cyclic
                                    ? static_cast<std::size_t>(t % n_rows)
                                    : sampler.uniform_index(n_rows);
        update_step(wm, normalized.rows[idx], t, cfg);
    }

    TrainingMeta meta{cfg, cfg.presentations};
    return {SomModel(std::move(wm), norm, std::move(meta)), std::move(trace)};
}

void write_trace_csv(const TrainingTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot open '" + path.string() + "' for writing");
    }
    out << "t,alpha,sigma,quantization_error\n";
    for (const auto& cp : trace.checkpoints) {
        out << cp.t << ',' << format_double(cp.alpha) << ',' << format_double(cp.sigma) << ','
            << format_double(cp.quantization_error) << '\n';
    }
    if (!out.flush()) {
        throw DataError("failed writing '" + path.string() + "'");
    }
}

}  // namespace somkit
