// Deterministic RNG streams. Per-trial streams are derived from (seed, trial)
// by a splitmix64 counter mix, so trial results do not depend on execution
// order. Uniform and normal variates are generated from raw 64-bit draws with
// explicit formulas (no library distributions) to keep output byte-stable.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace projsum::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class Stream {
public:
    explicit Stream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    // Counter-based split: independent stream for (seed, counter).
    static Stream for_trial(std::uint64_t seed, std::uint64_t counter) {
        return Stream(splitmix64(seed ^ splitmix64(counter + 0x51AB8F0CD15Eull)));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; caches the second variate.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Complex standard normal (E|z|^2 = 1).
    std::complex<double> complex_normal() {
        return {normal() * 0x1.6a09e667f3bcdp-1, normal() * 0x1.6a09e667f3bcdp-1};  // 1/sqrt(2)
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace projsum::rng
