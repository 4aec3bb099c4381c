#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace chainmap {

// Seeded generator with fixed-width draw helpers.  std::uniform_*_distribution
// is implementation-defined, so the draws are spelled out here to keep results
// bit-identical across standard libraries.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // Uniform index in [0, n).
    size_t index(size_t n) { return static_cast<size_t>(gen_() % n); }

    // Uniform double in [0, 1).
    double real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double real(double lo, double hi) { return lo + (hi - lo) * real(); }

    // Standard normal via Box-Muller.
    double normal() {
        double u1 = real();
        double u2 = real();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    long long int_range(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(gen_() % static_cast<uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace chainmap
