#pragma once

#include <cstdint>
#include <random>

namespace macrogrid {

/// Deterministic RNG wrapper. Draws are derived from raw mt19937_64 output
/// so sequences are identical across standard-library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (two raw draws per sample).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace macrogrid
