#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mbqc {

// splitmix64 mix; used to derive independent substream seeds from a master
// seed so that results do not depend on evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded generator wrapper. mt19937_64 output is fully specified by the
// standard, and the distributions below are written out explicitly, so a
// fixed seed yields bit-identical streams on every platform/compiler.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix_seed(seed, stream));
    }

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53-bit resolution
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform in [0, hi)
    std::uint64_t uniform_below(std::uint64_t hi) {
        // rejection sampling keeps the distribution exact
        const std::uint64_t limit = hi * (UINT64_MAX / hi);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % hi;
    }

    // Bernoulli draw: true with probability p
    bool bit(double p) { return uniform01() < p; }

    // standard normal via Box-Muller (pairs cached)
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mbqc
