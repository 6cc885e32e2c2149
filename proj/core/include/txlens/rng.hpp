#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace txlens {

// splitmix64 stream. Every seeded shuffle, split and sample in the toolkit
// draws from this generator so that a given build reproduces results
// bit-for-bit run after run.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n); n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    std::uint8_t byte() { return static_cast<std::uint8_t>(next() >> 56); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; consumes two uniforms per call, no cached second value.
    double normal(double mean, double stddev) {
        double u1 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * uniform01();
        return mean + stddev * r * std::cos(theta);
    }

    double exponential(double mean) {
        double u = uniform01();
        if (u <= 0.0) u = 0x1.0p-53;
        return -mean * std::log(u);
    }

    // Independent stream for a numbered consumer (e.g. one per node).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

// Fisher-Yates driven by splitmix64.
template <typename T>
void seeded_shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace txlens
