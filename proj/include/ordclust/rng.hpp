#pragma once

#include <cstdint>
#include <random>

namespace ordclust {

using Rng = std::mt19937_64;

/// splitmix64 finaliser over (master, stream). Distinct streams of one master
/// seed give independent-looking seeds, so trials can run in any order.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t master, std::uint64_t stream) {
    return Rng(split_seed(master, stream));
}

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace ordclust
