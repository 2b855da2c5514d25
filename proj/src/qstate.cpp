#include "ghzhs/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ghzhs/errors.hpp"
#include "ghzhs/rng.hpp"

namespace ghzhs {

namespace {

constexpr double kExactTol = 1e-12;     // exact-arithmetic-representable identities
constexpr double kEigenvalueTol = 1e-10;  // where eigensolvers are involved

void check_party_count(int n_parties) {
    if (n_parties < 1 || n_parties > kMaxParties) {
        throw std::invalid_argument("n_parties must be in 1.." + std::to_string(kMaxParties) +
                                    ", got " + std::to_string(n_parties));
    }
}

}  // namespace

PureState::PureState(int n_parties, Eigen::VectorXcd amplitudes)
    : n_parties_(n_parties), amplitudes_(std::move(amplitudes)) {
    check_party_count(n_parties_);
    const int dim = 1 << n_parties_;
    if (amplitudes_.size() != dim) {
        throw std::invalid_argument("amplitude vector has length " +
                                    std::to_string(amplitudes_.size()) + ", expected " +
                                    std::to_string(dim));
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kExactTol) {
        std::ostringstream msg;
        msg << "state is not normalized: sum |amp|^2 = " << norm2;
        throw ValidationError(msg.str());
    }
}

DensityMatrix::DensityMatrix(int n_parties, Eigen::MatrixXcd entries)
    : n_parties_(n_parties), entries_(std::move(entries)) {
    check_party_count(n_parties_);
    const int dim = 1 << n_parties_;
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw std::invalid_argument("matrix is " + std::to_string(entries_.rows()) + "x" +
                                    std::to_string(entries_.cols()) + ", expected " +
                                    std::to_string(dim) + "x" + std::to_string(dim));
    }

    double worst = 0.0;
    int worst_i = 0, worst_j = 0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double dev = std::abs(entries_(i, j) - std::conj(entries_(j, i)));
            if (dev > worst) {
                worst = dev;
                worst_i = i;
                worst_j = j;
            }
        }
    }
    if (worst > kExactTol) {
        std::ostringstream msg;
        msg << "hermiticity invariant violated at entry (" << worst_i << "," << worst_j
            << "): |rho(i,j) - conj(rho(j,i))| = " << worst;
        throw ValidationError(msg.str());
    }

    const std::complex<double> tr = entries_.trace();
    if (std::abs(tr - 1.0) > kExactTol) {
        std::ostringstream msg;
        msg << "unit-trace invariant violated: Tr(rho) = " << tr.real();
        if (tr.imag() != 0.0) msg << (tr.imag() < 0 ? "" : "+") << tr.imag() << "i";
        throw ValidationError(msg.str());
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kEigenvalueTol) {
        std::ostringstream msg;
        msg << "positive-semidefinite invariant violated: min eigenvalue = " << min_eig;
        throw ValidationError(msg.str());
    }
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

LocalUnitary::LocalUnitary(int party, Eigen::Matrix2cd matrix)
    : party_(party), matrix_(std::move(matrix)) {
    if (party_ < 0 || party_ >= kMaxParties) {
        throw std::out_of_range("party index " + std::to_string(party_) + " out of range");
    }
    const Eigen::Matrix2cd defect = matrix_ * matrix_.adjoint() - Eigen::Matrix2cd::Identity();
    const double dev = defect.cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
        std::ostringstream msg;
        msg << "matrix is not unitary: max entry of |U U^dag - I| = " << dev;
        throw ValidationError(msg.str());
    }
}

PureState ghz_pure() {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
    amps(0) = amps(7) = 1.0 / std::sqrt(2.0);
    return PureState(3, std::move(amps));
}

DensityMatrix ghz_density() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    m(0, 0) = m(0, 7) = m(7, 0) = m(7, 7) = 0.5;
    return DensityMatrix(3, std::move(m));
}

DensityMatrix pure_to_density(const PureState& state) {
    Eigen::MatrixXcd m = state.amplitudes() * state.amplitudes().adjoint();
    return DensityMatrix(state.n_parties(), std::move(m));
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const LocalUnitary& u) {
    const int n = rho.n_parties();
    if (u.party() >= n) {
        throw std::out_of_range("party index " + std::to_string(u.party()) +
                                " out of range for " + std::to_string(n) + " parties");
    }
    const int dim = rho.dim();
    const int bit = n - 1 - u.party();  // party a owns the most significant bit
    const int mask = 1 << bit;
    const Eigen::Matrix2cd& m = u.matrix();

    // Row transform, then column transform with U^dagger.
    Eigen::MatrixXcd tmp(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const int i0 = i & ~mask;
        const int i1 = i0 | mask;
        const int b = (i & mask) ? 1 : 0;
        tmp.row(i) = m(b, 0) * rho.entries().row(i0) + m(b, 1) * rho.entries().row(i1);
    }
    Eigen::MatrixXcd out(dim, dim);
    for (int j = 0; j < dim; ++j) {
        const int j0 = j & ~mask;
        const int j1 = j0 | mask;
        const int b = (j & mask) ? 1 : 0;
        out.col(j) = tmp.col(j0) * std::conj(m(b, 0)) + tmp.col(j1) * std::conj(m(b, 1));
    }
    return DensityMatrix(n, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.n_parties();
    if (keep.empty()) {
        throw std::out_of_range("keep set must not be empty");
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n) {
            throw std::out_of_range("keep party " + std::to_string(keep[i]) +
                                    " out of range for " + std::to_string(n) + " parties");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw std::out_of_range("keep set must be strictly increasing");
        }
    }

    const int nk = static_cast<int>(keep.size());
    std::vector<int> traced;
    for (int p = 0; p < n; ++p) {
        if (std::find(keep.begin(), keep.end(), p) == keep.end()) traced.push_back(p);
    }
    const int nt = static_cast<int>(traced.size());

    // Scatter the bits of a compact index (most significant first) onto the
    // full-index positions of the given parties.
    auto scatter = [n](int compact, const std::vector<int>& parties) {
        int full = 0;
        for (std::size_t q = 0; q < parties.size(); ++q) {
            const int b = (compact >> (parties.size() - 1 - q)) & 1;
            full |= b << (n - 1 - parties[q]);
        }
        return full;
    };

    const int dk = 1 << nk;
    const int dt = 1 << nt;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
    for (int i = 0; i < dk; ++i) {
        const int fi = scatter(i, keep);
        for (int j = 0; j < dk; ++j) {
            const int fj = scatter(j, keep);
            std::complex<double> sum = 0.0;
            for (int t = 0; t < dt; ++t) {
                const int ft = scatter(t, traced);
                sum += rho.entries()(fi | ft, fj | ft);
            }
            out(i, j) = sum;
        }
    }
    return DensityMatrix(nk, std::move(out));
}

DensityMatrix random_density(std::uint64_t seed, int n_parties, int rank) {
    check_party_count(n_parties);
    const int dim = 1 << n_parties;
    if (rank < 1 || rank > dim) {
        throw std::invalid_argument("rank must be in 1.." + std::to_string(dim) + ", got " +
                                    std::to_string(rank));
    }
    SplitMix64 rng(seed);
    Eigen::MatrixXcd g(dim, rank);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < rank; ++j) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    Eigen::MatrixXcd m = g * g.adjoint();
    m /= m.trace().real();
    // Symmetrize away the last-bit noise so the constructor's exact checks
    // see a clean Hermitian matrix.
    m = ((m + m.adjoint()) / 2.0).eval();
    return DensityMatrix(n_parties, std::move(m));
}

}  // namespace ghzhs
