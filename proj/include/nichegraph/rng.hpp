#pragma once

#include <cstdint>

namespace niche {

/// SplitMix64 stream. Every consumer of seeded randomness in this project
/// draws from this generator so that runs are reproducible bit-for-bit
/// across platforms and implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1; uses rejection to stay unbiased
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool coin() { return next() & 1u; }

private:
    std::uint64_t state_;
};

}  // namespace niche
