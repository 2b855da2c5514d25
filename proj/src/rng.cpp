#include "ghzhs/rng.hpp"

#include <cmath>
#include <numbers>

namespace ghzhs {

double SplitMix64::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 is kept away from 0 so the log is finite.
    double u1 = 0.0;
    do {
        u1 = next_double();
    } while (u1 <= 0.0);
    const double u2 = next_double();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::Matrix2cd haar_unitary(SplitMix64& rng) {
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase freedom: divide each column of Q by the phase of the
    // matching diagonal of R (Mezzadri's recipe).
    for (int j = 0; j < 2; ++j) {
        const std::complex<double> d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

}  // namespace ghzhs
