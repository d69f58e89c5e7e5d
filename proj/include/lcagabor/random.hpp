#pragma once

// Seeded draws built directly on mt19937_64 output so that sequences are
// identical across standard libraries (the <random> distributions are not).

#include <cstddef>
#include <cstdint>
#include <random>

namespace lcagabor {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform_symmetric(Rng& rng) { return 2.0 * uniform01(rng) - 1.0; }

/// Uniform in [0, n); n > 0. Modulo bias is irrelevant at desk scale.
inline std::size_t uniform_index(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace lcagabor
