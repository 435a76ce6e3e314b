#pragma once

#include <cstdint>
#include <random>

namespace nbs {

// Seeded 64-bit generator. All stochastic code draws through this wrapper
// instead of <random> distributions, so a seed reproduces the exact same
// stream on every compiler and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound), bound >= 1, without modulo bias.
    std::uint64_t index(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // True with probability p.
    bool coin(double p) { return real() < p; }

    bool half() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 eng_;
};

}  // namespace nbs
