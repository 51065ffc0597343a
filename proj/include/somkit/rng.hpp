#pragma once

#include <cstdint>
#include <random>

namespace somkit {

/// SplitMix64 step. Used to derive independent seeds from one user seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic PRNG wrapper. std::mt19937_64 is fully specified by the
/// standard, and the uniform mappings below avoid the implementation-defined
/// std::uniform_*_distribution, so identical seeds give identical streams on
/// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform index in [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n) {
        using u128 = unsigned __int128;
        return static_cast<std::size_t>((u128(next_u64()) * u128(n)) >> 64);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace somkit
