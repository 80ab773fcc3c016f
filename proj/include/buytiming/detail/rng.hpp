#pragma once

#include <cmath>
#include <cstdint>

namespace buytiming::detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// splitmix64 stream keyed by (seed, replication). Each replication owns an
// independent stream, so serial and parallel schedules draw identical
// numbers. The flip flag mirrors uniforms to 1-u for antithetic pairing.
class ReplicationRng {
public:
    ReplicationRng(std::uint64_t seed, std::uint64_t replication, bool flip = false)
        : state_(mix64(seed + 0x9E3779B97F4A7C15ull * (replication + 1))), flip_(flip) {}

    double uniform() {
        state_ += 0x9E3779B97F4A7C15ull;
        const double u = static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
        return flip_ ? 1.0 - u : u;
    }

    // Product-of-uniforms inversion below mean 30, transformed rejection
    // (Hormann's PTRS) above.
    std::uint64_t poisson(double mean) {
        if (!(mean > 0.0)) return 0;
        if (mean < 30.0) {
            const double limit = std::exp(-mean);
            std::uint64_t n = 0;
            double prod = uniform();
            while (prod > limit) {
                ++n;
                prod *= uniform();
            }
            return n;
        }
        const double b = 0.931 + 2.53 * std::sqrt(mean);
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double v_r = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            const double u = uniform() - 0.5;
            const double v = uniform();
            const double us = 0.5 - std::abs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
                kf * std::log(mean) - mean - std::lgamma(kf + 1.0))
                return static_cast<std::uint64_t>(kf);
        }
    }

private:
    std::uint64_t state_;
    bool flip_;
};

}  // namespace buytiming::detail
