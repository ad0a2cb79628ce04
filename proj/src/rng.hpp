#pragma once

#include <cmath>
#include <cstdint>

#include "multivector.hpp"

namespace bb {

// Counter-based stream: every draw is a pure function of
// (seed, trial index, draw index), so trial t of run r can be replayed
// without generating the trials before it and results are identical
// across platforms and thread schedules.
namespace rng_detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace rng_detail

class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : key_(rng_detail::mix64(rng_detail::mix64(seed + rng_detail::kGolden) ^
                                 (trial * 0xD1B54A32D192ED03ull + rng_detail::kGolden))) {}

    std::uint64_t next_u64() {
        return rng_detail::mix64(key_ + (++draw_) * rng_detail::kGolden);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1], safe as a log argument.
    double next_unit_positive() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    int next_sign() { return (next_u64() & 1ull) ? +1 : -1; }

    // Box-Muller pair; consumes exactly two draws.
    void next_gaussian_pair(double& g0, double& g1) {
        double u1 = next_unit_positive();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        g0 = r * std::cos(2.0 * M_PI * u2);
        g1 = r * std::sin(2.0 * M_PI * u2);
    }

    // Isotropic unit vector from three Gaussians; consumes four draws.
    Vector3 next_unit_vector() {
        double g0, g1, g2, g3;
        next_gaussian_pair(g0, g1);
        next_gaussian_pair(g2, g3);
        (void)g3;
        double n = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2);
        if (n == 0.0) return {0.0, 0.0, 1.0};
        return {g0 / n, g1 / n, g2 / n};
    }

private:
    std::uint64_t key_;
    std::uint64_t draw_ = 0;
};

} // namespace bb
