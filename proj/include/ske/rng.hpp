#pragma once

#include <cstdint>

namespace ske {

// SplitMix64 (Vigna's public-domain mixer). Small, seedable, and strong
// enough for Monte Carlo work; every simulation in this library draws from
// it so runs are reproducible from a single integer seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Unbiased integer in [0, bound) via rejection sampling. bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Stream splitting: run `i` of an experiment seeded with `seed` draws from
// an Rng whose initial state is seed XOR (odd constant * (i + 1)). Distinct
// runs get distinct, well-separated SplitMix64 state streams, so runs can
// execute in any order or in parallel without sharing generator state.
inline Rng stream_for_run(std::uint64_t seed, std::uint64_t run_index) {
    return Rng(seed ^ (0xD1B54A32D192ED03ull * (run_index + 1)));
}

} // namespace ske
