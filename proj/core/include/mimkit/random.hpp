#pragma once

#include <cstdint>
#include <random>

namespace mimkit {

/// Seeded generator used by every randomized sweep. The draw helpers below
/// avoid std distributions so that a seed reproduces the same graphs on
/// every standard library.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound); bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

/// Uniform double in [0, 1).
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace mimkit
