// Counter-based random numbers: every draw is a pure function of
// (seed, counter), so sampled ensembles are reproducible and independent
// of evaluation order or worker count.
#pragma once

#include <cstdint>

namespace relmaser {

// SplitMix64 finalizer over the keyed counter stream.
inline std::uint64_t counter_mix(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(counter_mix(seed, counter) >> 11) * 0x1.0p-53;
}

inline double counter_uniform_in(double lo, double hi,
                                 std::uint64_t seed, std::uint64_t counter) {
    return lo + (hi - lo) * counter_uniform(seed, counter);
}

}  // namespace relmaser
