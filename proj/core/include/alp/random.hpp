// random.hpp - portable deterministic sampling helpers.
//
// std::uniform_int_distribution is implementation-defined, so every
// stochastic choice in the library goes through these helpers instead.

#pragma once

#include <cstdint>
#include <random>

namespace alp {

using Rng = std::mt19937_64;

// Unbiased draw from [0, bound) by rejection. bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    // 2^64 mod bound; values below it would bias the low residues.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x < threshold);
    return x % bound;
}

// splitmix64 finalizer; derives independent sub-seeds from one top-level seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace alp
