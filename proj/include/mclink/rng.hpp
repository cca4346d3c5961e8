#pragma once

#include <cmath>
#include <cstdint>

#include "mclink/common.hpp"

namespace mclink {

/// Deterministic 64-bit generator (splitmix64 core). Monte-Carlo trials get
/// their own streams derived by hashing (master_seed, point, trial), so a
/// trial's draws never depend on scheduling, worker count, or platform RNG
/// internals. Gaussian variates come from an explicit Box-Muller transform for
/// the same reason: std::normal_distribution output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng for_trial(std::uint64_t master_seed, std::uint64_t point, std::uint64_t trial) {
        std::uint64_t s = mix(master_seed ^ 0xd1b54a32d192ed03ULL);
        s = mix(s + (point + 1) * 0x9e3779b97f4a7c15ULL);
        s = mix(s + (trial + 1) * 0xbf58476d1ce4e5b9ULL);
        return Rng(s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    int next_bit() { return int(next_u64() >> 63); }

    /// Circularly-symmetric complex Gaussian with E{|z|^2} = variance
    /// (variance/2 per real dimension). Consumes exactly two words.
    cplx next_cgauss(double variance) {
        const double u1 = (double(next_u64() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
        const double u2 = next_double();
        const double r = std::sqrt(-std::log(u1) * variance);
        return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace mclink
