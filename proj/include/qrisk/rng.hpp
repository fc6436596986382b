#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qrisk {

// Deterministic random source. std::mt19937_64 produces the same stream on
// every platform, and the draw helpers below avoid std::uniform_real_distribution
// and friends, whose output is implementation-defined. Two runs with the same
// seed therefore produce byte-identical simulation logs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform draw in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Exponential draw with the given mean, always strictly positive.
    double exponential(double mean) {
        double u = uniform01();
        while (u == 0.0) u = uniform01();
        return -mean * std::log(1.0 - u);
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace qrisk
