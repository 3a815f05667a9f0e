// Seedable, portable random source. The generator is std::mt19937_64 (fully
// specified by the standard, so streams are identical across platforms) and
// every variate is derived from raw 64-bit draws by hand so that no
// implementation-defined std::*_distribution enters the picture.
//
// Stream-splitting rule: child_seed(parent, k) = mix64(parent + GOLDEN * (k+1)).
// Parallel trials take distinct stream indices and are then independent of
// execution order.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace bayeserr {

// splitmix64 finalizer (Stafford mix 13).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t child_seed(std::uint64_t parent, std::uint64_t stream) {
    return mix64(parent + kGolden * (stream + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed + kGolden)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Standard normal via the Marsaglia polar method.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace bayeserr
