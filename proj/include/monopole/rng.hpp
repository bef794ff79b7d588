#pragma once

#include <cstdint>

namespace monopole {

// SplitMix64. All randomness in the project (random trees, random connected
// graphs, sweeps) funnels through one of these, so a seed fully determines a
// run on every platform. std::uniform_int_distribution is implementation
// defined and would break cross-machine reproducibility.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound). Modulo bias is irrelevant at the
    // bounds used here (graph sizes, edge counts).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace monopole
