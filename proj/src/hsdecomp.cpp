#include "ghzhs/hsdecomp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ghzhs/errors.hpp"

namespace ghzhs {

namespace {

using Complex = std::complex<double>;

const Eigen::Matrix2cd& pauli(int label) {
    static const Eigen::Matrix2cd table[4] = {
        Eigen::Matrix2cd::Identity(),
        (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
        (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
        (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),
    };
    return table[label];
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

PauliString::PauliString(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty() || labels_.size() > static_cast<std::size_t>(kMaxParties)) {
        throw std::invalid_argument("Pauli string must have 1.." + std::to_string(kMaxParties) +
                                    " labels");
    }
    for (int l : labels_) {
        if (l < 0 || l > 3) {
            throw std::invalid_argument("Pauli label " + std::to_string(l) + " not in 0..3");
        }
    }
}

PauliString PauliString::from_index(int n_parties, int index) {
    if (index < 0 || index >= (1 << (2 * n_parties))) {
        throw std::invalid_argument("Pauli string index " + std::to_string(index) +
                                    " out of range");
    }
    std::vector<int> labels(n_parties);
    for (int p = n_parties - 1; p >= 0; --p) {
        labels[p] = index & 3;
        index >>= 2;
    }
    return PauliString(std::move(labels));
}

PauliString PauliString::from_string(const std::string& text) {
    std::vector<int> labels;
    labels.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'I': labels.push_back(0); break;
            case 'X': labels.push_back(1); break;
            case 'Y': labels.push_back(2); break;
            case 'Z': labels.push_back(3); break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli label '") + c +
                                            "' (expected I, X, Y or Z)");
        }
    }
    return PauliString(std::move(labels));
}

int PauliString::weight() const {
    int w = 0;
    for (int l : labels_) w += (l != 0);
    return w;
}

int PauliString::index() const {
    int idx = 0;
    for (int l : labels_) idx = (idx << 2) | l;
    return idx;
}

std::string PauliString::str() const {
    static const char names[] = "IXYZ";
    std::string out;
    out.reserve(labels_.size());
    for (int l : labels_) out.push_back(names[l]);
    return out;
}

Eigen::MatrixXcd pauli_string_matrix(const PauliString& s) {
    Eigen::MatrixXcd m = pauli(s.label(0));
    for (int p = 1; p < s.n_parties(); ++p) {
        m = kron(m, pauli(s.label(p)));
    }
    return m;
}

CoefficientTensor::CoefficientTensor(int n_parties, std::vector<double> coefficients)
    : n_parties_(n_parties), coeffs_(std::move(coefficients)) {
    if (n_parties_ < 1 || n_parties_ > kMaxParties) {
        throw std::invalid_argument("n_parties must be in 1.." + std::to_string(kMaxParties));
    }
    const std::size_t expected = std::size_t(1) << (2 * n_parties_);
    if (coeffs_.size() != expected) {
        throw std::invalid_argument("coefficient vector has size " +
                                    std::to_string(coeffs_.size()) + ", expected " +
                                    std::to_string(expected));
    }
    if (std::abs(coeffs_[0] - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "unit coefficient (all-identity string) is " << coeffs_[0] << ", expected 1";
        throw ValidationError(msg.str());
    }
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const double c = coeffs_[i];
        if (!std::isfinite(c) || std::abs(c) > 1.0 + 1e-12) {
            std::ostringstream msg;
            msg << "coefficient " << PauliString::from_index(n_parties_, int(i)).str() << " = "
                << c << " outside [-1, 1]";
            throw ValidationError(msg.str());
        }
        sum_sq += c * c;
    }
    const double bound = double(1 << n_parties_);
    if (sum_sq > bound + 1e-10) {
        std::ostringstream msg;
        msg << "purity bound violated: sum of squared coefficients = " << sum_sq << " > "
            << bound;
        throw ValidationError(msg.str());
    }
}

double CoefficientTensor::purity_sum() const {
    double sum = 0.0;
    for (double c : coeffs_) sum += c * c;
    return sum;
}

void CoefficientTensor::require_three_party(const char* what) const {
    if (n_parties_ != 3) {
        throw std::invalid_argument(std::string(what) +
                                    " is a three-party view; tensor has n_parties = " +
                                    std::to_string(n_parties_));
    }
}

// Index of the three-party string with the given labels.
static int idx3(int la, int lb, int lc) { return (la << 4) | (lb << 2) | lc; }

Eigen::Vector3d CoefficientTensor::r() const {
    require_three_party("r");
    return {coeffs_[idx3(1, 0, 0)], coeffs_[idx3(2, 0, 0)], coeffs_[idx3(3, 0, 0)]};
}

Eigen::Vector3d CoefficientTensor::s() const {
    require_three_party("s");
    return {coeffs_[idx3(0, 1, 0)], coeffs_[idx3(0, 2, 0)], coeffs_[idx3(0, 3, 0)]};
}

Eigen::Vector3d CoefficientTensor::p() const {
    require_three_party("p");
    return {coeffs_[idx3(0, 0, 1)], coeffs_[idx3(0, 0, 2)], coeffs_[idx3(0, 0, 3)]};
}

Eigen::Matrix3d CoefficientTensor::q_ab() const {
    require_three_party("q_ab");
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = coeffs_[idx3(i + 1, j + 1, 0)];
    return m;
}

Eigen::Matrix3d CoefficientTensor::o_ac() const {
    require_three_party("o_ac");
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = coeffs_[idx3(i + 1, 0, j + 1)];
    return m;
}

Eigen::Matrix3d CoefficientTensor::t_bc() const {
    require_three_party("t_bc");
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = coeffs_[idx3(0, i + 1, j + 1)];
    return m;
}

double CoefficientTensor::R(int alpha, int beta, int gamma) const {
    require_three_party("R");
    if (alpha < 0 || alpha > 2 || beta < 0 || beta > 2 || gamma < 0 || gamma > 2) {
        throw std::out_of_range("R axis indices must be in 0..2");
    }
    return coeffs_[idx3(alpha + 1, beta + 1, gamma + 1)];
}

RotationMatrix::RotationMatrix(Eigen::Matrix3d matrix) : matrix_(std::move(matrix)) {
    const Eigen::Matrix3d defect = matrix_ * matrix_.transpose() - Eigen::Matrix3d::Identity();
    const double dev = defect.cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
        std::ostringstream msg;
        msg << "matrix is not orthogonal: max entry of |O O^T - I| = " << dev;
        throw ValidationError(msg.str());
    }
}

CoefficientTensor decompose(const DensityMatrix& rho) {
    return decompose(rho.n_parties(), rho.entries());
}

CoefficientTensor decompose(int n_parties, const Eigen::MatrixXcd& hermitian) {
    const int dim = 1 << n_parties;
    if (hermitian.rows() != dim || hermitian.cols() != dim) {
        throw std::invalid_argument("matrix dimension does not match n_parties");
    }
    const double herm_dev = (hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-12) {
        std::ostringstream msg;
        msg << "hermiticity invariant violated: max |M - M^dag| = " << herm_dev;
        throw ValidationError(msg.str());
    }

    const int n_strings = 1 << (2 * n_parties);
    std::vector<double> coeffs(n_strings);
    for (int idx = 0; idx < n_strings; ++idx) {
        const PauliString s = PauliString::from_index(n_parties, idx);
        const Complex tr = (hermitian * pauli_string_matrix(s)).trace();
        if (std::abs(tr.imag()) > 1e-12) {
            std::ostringstream msg;
            msg << "coefficient " << s.str() << " has imaginary part " << tr.imag();
            throw ValidationError(msg.str());
        }
        coeffs[idx] = tr.real();
    }
    return CoefficientTensor(n_parties, std::move(coeffs));
}

Eigen::MatrixXcd reconstruct(const CoefficientTensor& coeffs) {
    const int n = coeffs.n_parties();
    const int dim = 1 << n;
    if (coeffs.unit() != 1.0 && std::abs(coeffs.unit() - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "unit coefficient is " << coeffs.unit() << ", expected 1";
        throw ValidationError(msg.str());
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (int idx = 0; idx < coeffs.size(); ++idx) {
        const double c = coeffs.coefficient(idx);
        if (c == 0.0) continue;
        m += c * pauli_string_matrix(PauliString::from_index(n, idx));
    }
    return m / double(dim);
}

DensityMatrix reconstruct_density(const CoefficientTensor& coeffs) {
    return DensityMatrix(coeffs.n_parties(), reconstruct(coeffs));
}

RotationMatrix su2_to_so3(const Eigen::Matrix2cd& u) {
    const Eigen::Matrix2cd defect = u * u.adjoint() - Eigen::Matrix2cd::Identity();
    const double dev = defect.cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
        std::ostringstream msg;
        msg << "matrix is not unitary: max entry of |U U^dag - I| = " << dev;
        throw ValidationError(msg.str());
    }
    // R[i][j] = Tr[sigma_{i+1} U sigma_{j+1} U^dag] / 2. The global phase of
    // u cancels between U and U^dag.
    Eigen::Matrix3d r;
    const Eigen::Matrix2cd udag = u.adjoint();
    for (int j = 0; j < 3; ++j) {
        const Eigen::Matrix2cd conj = u * pauli(j + 1) * udag;
        for (int i = 0; i < 3; ++i) {
            r(i, j) = (pauli(i + 1) * conj).trace().real() / 2.0;
        }
    }
    return RotationMatrix(std::move(r));
}

CoefficientTensor rotate_frame(const CoefficientTensor& coeffs,
                               const std::vector<RotationMatrix>& rotations) {
    const int n = coeffs.n_parties();
    if (static_cast<int>(rotations.size()) != n) {
        throw std::invalid_argument("expected one rotation per party (" + std::to_string(n) +
                                    "), got " + std::to_string(rotations.size()));
    }

    std::vector<double> work = coeffs.coefficients();
    std::vector<double> next(work.size());
    for (int party = 0; party < n; ++party) {
        // Extend the 3x3 rotation with a unit identity slot: the label-0
        // component of every string is frame-independent.
        double w[4][4] = {};
        w[0][0] = 1.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) w[i + 1][j + 1] = rotations[party].matrix()(i, j);

        const int shift = 2 * (n - 1 - party);
        for (std::size_t idx = 0; idx < work.size(); ++idx) {
            const int label = (idx >> shift) & 3;
            const std::size_t base = idx & ~(std::size_t(3) << shift);
            double sum = 0.0;
            for (int j = 0; j < 4; ++j) {
                // Skipping exact zeros keeps untouched blocks bitwise
                // identical (no -0.0 flips from adding zero terms).
                if (w[label][j] == 0.0) continue;
                sum += w[label][j] * work[base | (std::size_t(j) << shift)];
            }
            next[idx] = sum;
        }
        work.swap(next);
    }
    return CoefficientTensor(n, std::move(work));
}

CoefficientTensor transform_under_local_unitary(const CoefficientTensor& coeffs,
                                                const LocalUnitary& u) {
    const int n = coeffs.n_parties();
    if (u.party() >= n) {
        throw std::out_of_range("party index " + std::to_string(u.party()) +
                                " out of range for " + std::to_string(n) + " parties");
    }
    std::vector<RotationMatrix> rotations(n, RotationMatrix::identity());
    rotations[u.party()] = su2_to_so3(u.matrix());
    return rotate_frame(coeffs, rotations);
}

}  // namespace ghzhs
