#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace ghzhs {

// splitmix64 (Steele, Lea, Flood): a 64-bit counter-based generator. The
// generator is pinned so every seeded fixture in this repository is
// bit-reproducible; seeds are taken directly from the caller.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double next_gaussian();

    std::complex<double> next_complex_gaussian() { return {next_gaussian(), next_gaussian()}; }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Haar-distributed 2x2 unitary: complex Ginibre matrix, QR factorization,
// then the diagonal of R is phase-normalized away.
Eigen::Matrix2cd haar_unitary(SplitMix64& rng);

}  // namespace ghzhs
