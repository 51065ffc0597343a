#pragma once

#include <cstdint>
#include <string>

namespace somkit {

/// How the pattern presented at step t is chosen.
enum class SamplingMode {
    Cyclic,         // row t mod N
    UniformRandom,  // seeded PRNG stream, independent of weight initialization
};

std::string to_string(SamplingMode mode);
SamplingMode sampling_mode_from_string(const std::string& s);

struct TrainingConfig {
    std::size_t side = 0;
    std::uint64_t presentations = 0;
    double initial_learning_rate = 0.1;
    /// Neighbourhood radius at t = 0; must be >= 1 so the radius schedule
    /// stays in [1, initial_radius]. default_radius(side) gives the usual
    /// side/2 choice.
    double initial_radius = 0.0;
    std::uint64_t seed = 0;
    SamplingMode sampling = SamplingMode::UniformRandom;

    /// Throws ConfigError unless side >= 1, presentations >= 1,
    /// learning rate in (0, 1] and radius >= 1.
    void validate() const;

    friend bool operator==(const TrainingConfig&, const TrainingConfig&) = default;
};

inline double default_radius(std::size_t side) {
    const double r = static_cast<double>(side) / 2.0;
    return r < 1.0 ? 1.0 : r;
}

}  // namespace somkit
