#pragma once

#include <cstdint>

namespace weakeq {

/// splitmix64: tiny, fully specified generator. Used everywhere randomness is
/// needed so that results are reproducible across platforms and thread counts.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound must be positive. Modulo bias is
    /// negligible at the scales used here (bound << 2^64).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// Derive an independent stream for a sub-task (sample index, trial index).
/// Deterministic in (seed, index); streams do not depend on thread layout.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0xA5A5A5A55A5A5A5AULL + index * 0x9E3779B97F4A7C15ULL));
    return g.next();
}

} // namespace weakeq
