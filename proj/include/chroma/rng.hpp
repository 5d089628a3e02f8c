#pragma once

#include <cstdint>

namespace chroma {

// splitmix64. The update and finalizer constants below pin the generator
// completely; docs/formats.md repeats them so generated corpora can be
// reproduced bit-for-bit outside this codebase.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53 mantissa bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // modulo draw; the modulo bias is irrelevant at the bounds used here
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

// stateless splitmix finalizer
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed for the index-th stream of a master seed. Each fuzz instance draws
// from its own stream, so results never depend on scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace chroma
