#pragma once

#include <cstdint>

namespace weekfx::rng {

/// SplitMix64 step. Used to expand seeds and to derive independent
/// sub-stream seeds; reference outputs are pinned in docs/rng.md.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// xoshiro256++ stream generator, state expanded from a 64-bit seed via
/// SplitMix64. Output sequence is identical on every platform.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 mantissa bits of the next output.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Poisson sampling by uniform products (Knuth); means above 30 are
    /// split off in chunks to keep exp(-mean) away from underflow.
    std::int64_t poisson(double mean);

    /// Binomial as n Bernoulli draws; n is small everywhere it is used.
    std::int64_t binomial(std::int64_t n, double p) {
        std::int64_t hits = 0;
        for (std::int64_t i = 0; i < n; ++i) hits += bernoulli(p) ? 1 : 0;
        return hits;
    }

    /// Standard normal via Box-Muller (one draw per pair; the second is
    /// cached).
    double normal();

    double exponential(double rate);
    double weibull(double shape, double scale);

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4] = {};
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

/// Deterministic seed for sub-stream `index` of a master seed.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace weekfx::rng
