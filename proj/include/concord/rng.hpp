// Deterministic random sampling built on mt19937_64. The standard library's
// distributions are implementation-defined, so the draw transforms live here:
// identical seeds must reproduce identical estimates across toolchains.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace concord {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Stable sub-stream seed for a work unit (grid point, bin, rerun, ...).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t h = splitmix64(seed ^ splitmix64(a + 1));
    h = splitmix64(h ^ splitmix64(b + 2));
    return splitmix64(h ^ splitmix64(c + 3));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t uniform_u64(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform double in [0, 1) with 53 bits of entropy.
    double uniform_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform_double(double lo, double hi) { return lo + (hi - lo) * uniform_double(); }

    // Box-Muller; one spare value cached between calls.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = uniform_double();
        } while (u1 <= 0.0);
        const double u2 = uniform_double();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = mag * std::sin(ang);
        has_spare_ = true;
        return mag * std::cos(ang);
    }

    // Inversion by sequential search; the means in this code base stay small.
    std::uint32_t poisson(double mean) {
        double p = std::exp(-mean);
        double cdf = p;
        const double u = uniform_double();
        std::uint32_t k = 0;
        while (u > cdf && k < 10000) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }

    // Marsaglia-Tsang, with the u^(1/a) boost for shape < 1.
    double gamma(double shape, double scale) {
        if (shape < 1.0) {
            const double u = std::max(uniform_double(), 1e-300);
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace concord
