#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ghzhs/qstate.hpp"

namespace ghzhs {

// One label from {0 = I, 1 = sigma_1, 2 = sigma_2, 3 = sigma_3} per party.
class PauliString {
  public:
    explicit PauliString(std::vector<int> labels);

    // Base-4 index with party a as the most significant digit; ordering
    // coincides with lexicographic order over I < X < Y < Z.
    static PauliString from_index(int n_parties, int index);
    static PauliString from_string(const std::string& text);  // e.g. "IXZ"

    int n_parties() const { return static_cast<int>(labels_.size()); }
    int label(int party) const { return labels_[party]; }
    const std::vector<int>& labels() const { return labels_; }
    int weight() const;  // number of non-identity labels
    int index() const;
    std::string str() const;

  private:
    std::vector<int> labels_;
};

// Kronecker product of the per-party 2x2 factors in party order a x b x c.
Eigen::MatrixXcd pauli_string_matrix(const PauliString& s);

// The real coefficient family c_s = Tr[rho M_s] over all 4^n Pauli strings,
// stored densely in PauliString::index order. The all-identity coefficient
// is 1 for any unit-trace state; every coefficient lies in [-1, 1]; the sum
// of squares never exceeds 2^n.
class CoefficientTensor {
  public:
    CoefficientTensor(int n_parties, std::vector<double> coefficients);

    int n_parties() const { return n_parties_; }
    int size() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<double>& coefficients() const { return coeffs_; }
    double coefficient(const PauliString& s) const { return coeffs_[s.index()]; }
    double coefficient(int index) const { return coeffs_[index]; }

    double unit() const { return coeffs_[0]; }
    double purity_sum() const;  // sum of squared coefficients = 2^n Tr(rho^2)

    // Named three-party views (axis i corresponds to sigma_{i+1}). q_ab is
    // the two-party a-b block written p_ij elsewhere in the literature; it
    // is renamed here to avoid colliding with the single-party vector p.
    Eigen::Vector3d r() const;     // weight-1 on a
    Eigen::Vector3d s() const;     // weight-1 on b
    Eigen::Vector3d p() const;     // weight-1 on c
    Eigen::Matrix3d q_ab() const;  // weight-2 on a,b
    Eigen::Matrix3d o_ac() const;  // weight-2 on a,c
    Eigen::Matrix3d t_bc() const;  // weight-2 on b,c
    double R(int alpha, int beta, int gamma) const;  // weight-3 tensor

  private:
    void require_three_party(const char* what) const;

    int n_parties_;
    std::vector<double> coeffs_;
};

// 3x3 orthogonal matrix (checked on construction).
class RotationMatrix {
  public:
    explicit RotationMatrix(Eigen::Matrix3d matrix);
    static RotationMatrix identity() { return RotationMatrix(Eigen::Matrix3d::Identity()); }

    const Eigen::Matrix3d& matrix() const { return matrix_; }
    bool is_identity() const { return matrix_ == Eigen::Matrix3d::Identity(); }

  private:
    Eigen::Matrix3d matrix_;
};

CoefficientTensor decompose(const DensityMatrix& rho);

// Same map on a raw matrix (Hermiticity and unit trace still required, PSD
// not): round-trip tests feed reconstructions that need not be states.
CoefficientTensor decompose(int n_parties, const Eigen::MatrixXcd& hermitian);

// rho = 2^{-n} sum_s c_s M_s. Hermitian and unit-trace by construction; PSD
// is not guaranteed for arbitrary coefficient input, so the raw matrix is
// returned and validation is the caller's choice.
Eigen::MatrixXcd reconstruct(const CoefficientTensor& coeffs);

// Validating convenience wrapper around reconstruct().
DensityMatrix reconstruct_density(const CoefficientTensor& coeffs);

// Adjoint map SU(2) -> SO(3): the rotation R with U (n.sigma) U^dag =
// (R n).sigma, i.e. R[i][j] = Tr[sigma_{i+1} U sigma_{j+1} U^dag] / 2.
// Orthogonal with det +1; independent of the global phase of u.
RotationMatrix su2_to_so3(const Eigen::Matrix2cd& u);

// Change of measurement frame, one rotation per party: weight-1 vectors map
// as O v, weight-2 matrices as O_x T O_y^T, the weight-3 tensor contracts
// with one O per axis. Blocks whose string is identity on every rotated
// party come back bitwise unchanged.
CoefficientTensor rotate_frame(const CoefficientTensor& coeffs,
                               const std::vector<RotationMatrix>& rotations);

// Coefficient-level action of a one-sided unitary; equals
// decompose(apply_local_unitary(reconstruct(coeffs), u)).
CoefficientTensor transform_under_local_unitary(const CoefficientTensor& coeffs,
                                                const LocalUnitary& u);

}  // namespace ghzhs
