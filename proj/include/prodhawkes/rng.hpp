#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace prodhawkes {

/// Seeded RNG with portable draw helpers. std::mt19937_64 output is
/// pinned by the standard; the distributions below are implemented by
/// hand so that a given seed yields the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Exponential waiting time with the given rate (> 0).
    double exponential(double rate) {
        return -std::log1p(-uniform01()) / rate;
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n)) % n;
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace prodhawkes
