#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bnsl {

/// Derives a reproducible generator for (seed, component, index). All
/// randomness in the library flows through here so that a run is fully
/// determined by its seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view component, std::uint64_t index) {
    // FNV-1a over the component name, then a splitmix64 finalizer.
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : component) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::uint64_t z = seed ^ (h + 0x9e3779b97f4a7c15ULL + (index << 6) + (index >> 2));
    z += index * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view component, std::uint64_t index = 0) {
    return std::mt19937_64(mix_seed(seed, component, index));
}

/// Uniform double in [0, 1) with 53 random bits; independent of the
/// standard library's distribution implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace bnsl
