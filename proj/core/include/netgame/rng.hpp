#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace netgame {

/// Mixes a 64-bit state into a well-distributed output (splitmix64 step).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a base seed and up to two indices.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t s = base;
    std::uint64_t out = splitmix64(s);
    s ^= a * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL;
    out ^= splitmix64(s);
    s ^= b * 0xDA942042E4DD58B5ULL + 0x9E3779B97F4A7C15ULL;
    out ^= splitmix64(s);
    return out;
}

/// Deterministic random source. All draws are derived from std::mt19937_64,
/// whose output sequence is fixed by the standard, and all distributions are
/// implemented here rather than via std::*_distribution (whose streams are
/// implementation-defined). Identical seeds give identical draws on every
/// platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
    std::uint64_t uniform_int(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    /// Standard normal via Box-Muller (deterministic given the seed).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace netgame
