#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace ghzhs {

// Dense representations stay tractable up to six parties (64x64).
inline constexpr int kMaxParties = 6;

// Basis convention used everywhere: party a is the most significant bit of
// the computational basis index, so |abc> sits at index 4a + 2b + c, with
// |a> = (1,0)^T on bit value 0 and |a'> = (0,1)^T on bit value 1.

class PureState {
  public:
    PureState(int n_parties, Eigen::VectorXcd amplitudes);

    int n_parties() const { return n_parties_; }
    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

  private:
    int n_parties_;
    Eigen::VectorXcd amplitudes_;
};

// Hermitian, unit-trace, positive semidefinite 2^n x 2^n matrix. All three
// invariants are checked on construction (PSD through a Hermitian
// eigensolver so rank-deficient states validate cleanly).
class DensityMatrix {
  public:
    DensityMatrix(int n_parties, Eigen::MatrixXcd entries);

    int n_parties() const { return n_parties_; }
    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }

    double purity() const;  // Tr(rho^2)

  private:
    int n_parties_;
    Eigen::MatrixXcd entries_;
};

// A 2x2 unitary tagged with the party it acts on (0 = a, 1 = b, 2 = c, ...).
class LocalUnitary {
  public:
    LocalUnitary(int party, Eigen::Matrix2cd matrix);

    int party() const { return party_; }
    const Eigen::Matrix2cd& matrix() const { return matrix_; }

  private:
    int party_;
    Eigen::Matrix2cd matrix_;
};

// (|000> + |111>)/sqrt(2).
PureState ghz_pure();

// Its projector: 1/2 at the four corner entries (0,0), (0,7), (7,0), (7,7).
DensityMatrix ghz_density();

DensityMatrix pure_to_density(const PureState& state);

// (I x ... x U x ... x I) rho (same)^dagger with U on u.party.
DensityMatrix apply_local_unitary(const DensityMatrix& rho, const LocalUnitary& u);

// Reduced state over `keep` (non-empty, strictly increasing party indices);
// the kept parties retain their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Deterministic test fixture: G G^dagger / Tr(G G^dagger) with G a
// 2^n x rank matrix of seeded standard-normal complex entries.
DensityMatrix random_density(std::uint64_t seed, int n_parties, int rank);

}  // namespace ghzhs
