#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <map>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "ghzhs/errors.hpp"
#include "ghzhs/hsdecomp.hpp"
#include "ghzhs/interferometer.hpp"
#include "ghzhs/qstate.hpp"
#include "ghzhs/rng.hpp"
#include "oracles.hpp"

using namespace ghzhs;

namespace {

// The Eq.-(8) parameter set of the GHZ state, verified against the
// independent trace oracle before being frozen here.
const std::map<std::string, double> kGhzNonzero = {
    {"III", 1.0}, {"IZZ", 1.0}, {"ZIZ", 1.0},  {"ZZI", 1.0},
    {"XXX", 1.0}, {"XYY", -1.0}, {"YXY", -1.0}, {"YYX", -1.0},
};

double expected_ghz(const std::string& s) {
    const auto it = kGhzNonzero.find(s);
    return it == kGhzNonzero.end() ? 0.0 : it->second;
}

CoefficientTensor ghz_coefficients() {
    std::vector<double> coeffs(64, 0.0);
    for (const auto& [name, value] : kGhzNonzero) {
        coeffs[PauliString::from_string(name).index()] = value;
    }
    return CoefficientTensor(3, std::move(coeffs));
}

bool bitwise_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("PauliString indexing and naming") {
    const PauliString s = PauliString::from_string("IXZ");
    CHECK(s.labels() == std::vector<int>{0, 1, 3});
    CHECK(s.weight() == 2);
    CHECK(s.index() == 0 * 16 + 1 * 4 + 3);
    CHECK(s.str() == "IXZ");
    CHECK(PauliString::from_index(3, s.index()).str() == "IXZ");
    for (int idx = 0; idx < 64; ++idx) {
        CHECK(PauliString::from_index(3, idx).index() == idx);
    }
    CHECK_THROWS_AS(PauliString::from_string("IXQ"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString(std::vector<int>{0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(PauliString(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("pauli_string_matrix") {
    SUBCASE("ZZZ is the parity diagonal") {
        const Eigen::MatrixXcd m = pauli_string_matrix(PauliString::from_string("ZZZ"));
        const double expected[8] = {1, -1, -1, 1, -1, 1, 1, -1};
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                CHECK(m(i, j) == std::complex<double>(i == j ? expected[i] : 0.0, 0.0));
            }
        }
    }
    SUBCASE("III is the identity") {
        CHECK((pauli_string_matrix(PauliString::from_string("III")) -
               Eigen::MatrixXcd::Identity(8, 8))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
    SUBCASE("exhaustive orthogonality: Tr(M_s M_t) = 8 delta_st") {
        std::vector<Eigen::MatrixXcd> mats;
        mats.reserve(64);
        for (int idx = 0; idx < 64; ++idx) {
            mats.push_back(pauli_string_matrix(PauliString::from_index(3, idx)));
        }
        for (int s = 0; s < 64; ++s) {
            CHECK((mats[s] - mats[s].adjoint()).cwiseAbs().maxCoeff() == 0.0);
            for (int t = 0; t < 64; ++t) {
                const std::complex<double> tr = (mats[s] * mats[t]).trace();
                CHECK(std::abs(tr - std::complex<double>(s == t ? 8.0 : 0.0, 0.0)) < 1e-14);
            }
        }
    }
}

TEST_CASE("decompose reproduces the GHZ parameter set") {
    const CoefficientTensor c = decompose(ghz_density());
    for (int idx = 0; idx < 64; ++idx) {
        const std::string name = PauliString::from_index(3, idx).str();
        CHECK(std::abs(c.coefficient(idx) - expected_ghz(name)) < 1e-12);
    }
    CHECK(c.R(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.R(0, 1, 1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(c.t_bc()(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.o_ac()(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.q_ab()(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.r().norm() < 1e-12);
    CHECK(c.s().norm() < 1e-12);
    CHECK(c.p().norm() < 1e-12);
}

TEST_CASE("decompose on simple fixtures") {
    SUBCASE("maximally mixed state has only the unit coefficient") {
        const CoefficientTensor c =
            decompose(DensityMatrix(3, Eigen::MatrixXcd::Identity(8, 8) / 8.0));
        CHECK(c.unit() == doctest::Approx(1.0).epsilon(1e-14));
        for (int idx = 1; idx < 64; ++idx) {
            CHECK(std::abs(c.coefficient(idx)) < 1e-14);
        }
    }
    SUBCASE("|000>: every {I,Z} string reads 1, every X/Y string reads 0") {
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
        amps(0) = 1.0;
        const CoefficientTensor c = decompose(pure_to_density(PureState(3, amps)));
        for (int idx = 0; idx < 64; ++idx) {
            const PauliString s = PauliString::from_index(3, idx);
            const bool z_only = s.str().find('X') == std::string::npos &&
                                s.str().find('Y') == std::string::npos;
            CHECK(std::abs(c.coefficient(idx) - (z_only ? 1.0 : 0.0)) < 1e-14);
        }
    }
    SUBCASE("|001>: party ordering shows up in the signs") {
        // Frozen from the independent oracle; distinguishes a x b x c from
        // the reversed operator ordering.
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
        amps(1) = 1.0;
        const CoefficientTensor c = decompose(pure_to_density(PureState(3, amps)));
        const std::map<std::string, double> expected = {
            {"III", 1.0}, {"IIZ", -1.0}, {"IZI", 1.0},  {"IZZ", -1.0},
            {"ZII", 1.0}, {"ZIZ", -1.0}, {"ZZI", 1.0},  {"ZZZ", -1.0},
        };
        for (int idx = 0; idx < 64; ++idx) {
            const std::string name = PauliString::from_index(3, idx).str();
            const auto it = expected.find(name);
            const double want = it == expected.end() ? 0.0 : it->second;
            CHECK(std::abs(c.coefficient(idx) - want) < 1e-14);
        }
    }
    SUBCASE("agrees with the elementwise trace oracle on random states") {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const DensityMatrix rho = random_density(seed, 3, 4);
            const CoefficientTensor c = decompose(rho);
            for (int idx = 0; idx < 64; ++idx) {
                const double ref =
                    oracle::coefficient(rho.entries(), PauliString::from_index(3, idx).labels());
                CHECK(std::abs(c.coefficient(idx) - ref) < 1e-13);
            }
        }
    }
    SUBCASE("rejects non-Hermitian input") {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8) / 8.0;
        m(0, 1) = 0.2;
        CHECK_THROWS_AS(decompose(3, m), ValidationError);
    }
}

TEST_CASE("reconstruct") {
    SUBCASE("the Eq.-(8) set rebuilds the GHZ density matrix") {
        const Eigen::MatrixXcd m = reconstruct(ghz_coefficients());
        CHECK((m - ghz_density().entries()).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("unit coefficient alone rebuilds the maximally mixed state") {
        std::vector<double> coeffs(64, 0.0);
        coeffs[0] = 1.0;
        const Eigen::MatrixXcd m = reconstruct(CoefficientTensor(3, std::move(coeffs)));
        CHECK((m - Eigen::MatrixXcd::Identity(8, 8) / 8.0).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("round trip both directions on random density matrices") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const int rank = 1 << (seed % 4);
            const DensityMatrix rho = random_density(seed, 3, rank);
            const CoefficientTensor c = decompose(rho);
            CHECK((reconstruct(c) - rho.entries()).cwiseAbs().maxCoeff() < 1e-12);
            const CoefficientTensor c2 = decompose(3, reconstruct(c));
            for (int idx = 0; idx < 64; ++idx) {
                CHECK(std::abs(c2.coefficient(idx) - c.coefficient(idx)) < 1e-12);
            }
        }
    }
    SUBCASE("round trip on random coefficient sets inside the purity bound") {
        SplitMix64 rng(2024);
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<double> coeffs(64);
            coeffs[0] = 1.0;
            double sum_sq = 0.0;
            double max_abs = 0.0;
            for (int idx = 1; idx < 64; ++idx) {
                coeffs[idx] = 2.0 * rng.next_double() - 1.0;
                sum_sq += coeffs[idx] * coeffs[idx];
                max_abs = std::max(max_abs, std::abs(coeffs[idx]));
            }
            // Scale the non-unit part so the sum of squares stays below 2^n
            // and no single coefficient leaves [-1, 1].
            const double cap = std::min(std::sqrt(7.0 / sum_sq), 1.0 / max_abs);
            const double scale = cap * rng.next_double();
            for (int idx = 1; idx < 64; ++idx) coeffs[idx] *= scale;
            const CoefficientTensor c(3, coeffs);
            const CoefficientTensor back = decompose(3, reconstruct(c));
            for (int idx = 0; idx < 64; ++idx) {
                CHECK(std::abs(back.coefficient(idx) - c.coefficient(idx)) < 1e-12);
            }
        }
    }
    SUBCASE("validating wrapper rejects non-PSD coefficient sets") {
        std::vector<double> coeffs(64, 0.0);
        coeffs[0] = 1.0;
        coeffs[PauliString::from_string("ZZZ").index()] = 1.0;
        coeffs[PauliString::from_string("ZII").index()] = -1.0;
        CHECK_THROWS_AS(reconstruct_density(CoefficientTensor(3, std::move(coeffs))),
                        ValidationError);
    }
}

TEST_CASE("coefficient tensor invariants") {
    SUBCASE("unit coefficient must be 1") {
        std::vector<double> coeffs(64, 0.0);
        coeffs[0] = 0.5;
        CHECK_THROWS_AS(CoefficientTensor(3, std::move(coeffs)), ValidationError);
    }
    SUBCASE("coefficients must stay in [-1, 1]") {
        std::vector<double> coeffs(64, 0.0);
        coeffs[0] = 1.0;
        coeffs[5] = 1.5;
        CHECK_THROWS_AS(CoefficientTensor(3, std::move(coeffs)), ValidationError);
    }
    SUBCASE("purity bound is enforced") {
        std::vector<double> coeffs(64, 0.0);
        coeffs[0] = 1.0;
        for (int idx = 1; idx < 64; ++idx) coeffs[idx] = 0.5;
        CHECK_THROWS_AS(CoefficientTensor(3, std::move(coeffs)), ValidationError);
    }
    SUBCASE("purity identity for random states") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const int rank = 1 << (seed % 4);
            const DensityMatrix rho = random_density(seed, 3, rank);
            CHECK(decompose(rho).purity_sum() ==
                  doctest::Approx(8.0 * rho.purity()).epsilon(1e-10));
        }
        CHECK(std::abs(decompose(ghz_density()).purity_sum() - 8.0) < 1e-12);
    }
}

TEST_CASE("su2_to_so3") {
    SUBCASE("identity maps to identity") {
        CHECK((su2_to_so3(Eigen::Matrix2cd::Identity()).matrix() - Eigen::Matrix3d::Identity())
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
    SUBCASE("rotation about axis 3, signs frozen from direct expansion") {
        const double theta = std::numbers::pi / 2.0;
        Eigen::Matrix2cd u;
        u << std::exp(std::complex<double>(0, -theta / 2)), 0, 0,
            std::exp(std::complex<double>(0, theta / 2));
        const Eigen::Matrix3d m = su2_to_so3(u).matrix();
        CHECK(m(0, 0) == doctest::Approx(std::cos(theta)).epsilon(1e-12));
        CHECK(m(1, 1) == doctest::Approx(std::cos(theta)).epsilon(1e-12));
        CHECK(m(0, 1) == doctest::Approx(-std::sin(theta)).epsilon(1e-12));
        CHECK(m(1, 0) == doctest::Approx(std::sin(theta)).epsilon(1e-12));
        CHECK(m(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(m(0, 2)) + std::abs(m(1, 2)) + std::abs(m(2, 0)) + std::abs(m(2, 1)) <
              1e-12);
    }
    SUBCASE("global phase drops out") {
        SplitMix64 rng(3);
        const Eigen::Matrix2cd u = haar_unitary(rng);
        const Eigen::Matrix3d base = su2_to_so3(u).matrix();
        for (int rep = 0; rep < 10; ++rep) {
            const double alpha = 2.0 * std::numbers::pi * rng.next_double();
            const Eigen::Matrix2cd v = std::exp(std::complex<double>(0, alpha)) * u;
            CHECK((su2_to_so3(v).matrix() - base).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("homomorphism and special orthogonality on random pairs") {
        SplitMix64 rng(4);
        for (int rep = 0; rep < 50; ++rep) {
            const Eigen::Matrix2cd u = haar_unitary(rng);
            const Eigen::Matrix2cd v = haar_unitary(rng);
            const Eigen::Matrix3d mu = su2_to_so3(u).matrix();
            const Eigen::Matrix3d mv = su2_to_so3(v).matrix();
            const Eigen::Matrix3d muv = su2_to_so3(u * v).matrix();
            CHECK((muv - mu * mv).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((mu * mu.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <
                  1e-12);
            CHECK(mu.determinant() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("rejects non-unitary input") {
        Eigen::Matrix2cd m;
        m << 1, 0, 0, 2;
        CHECK_THROWS_AS(su2_to_so3(m), ValidationError);
    }
}

TEST_CASE("rotate_frame") {
    const CoefficientTensor ghz = decompose(ghz_density());

    SUBCASE("all-identity rotations return the input bitwise") {
        const std::vector<RotationMatrix> ids(3, RotationMatrix::identity());
        const CoefficientTensor out = rotate_frame(ghz, ids);
        for (int idx = 0; idx < 64; ++idx) {
            CHECK(bitwise_equal(out.coefficient(idx), ghz.coefficient(idx)));
        }
    }
    SUBCASE("matches the state-path transform for random states and unitaries") {
        SplitMix64 rng(5);
        for (int rep = 0; rep < 50; ++rep) {
            const DensityMatrix rho = random_density(rep, 3, 1 + (rep % 8));
            const Eigen::Matrix2cd u = haar_unitary(rng);
            const std::vector<RotationMatrix> rots = {su2_to_so3(u), RotationMatrix::identity(),
                                                      RotationMatrix::identity()};
            const CoefficientTensor via_coeffs = rotate_frame(decompose(rho), rots);
            const CoefficientTensor via_state =
                decompose(apply_local_unitary(rho, LocalUnitary(0, u)));
            for (int idx = 0; idx < 64; ++idx) {
                CHECK(std::abs(via_coeffs.coefficient(idx) - via_state.coefficient(idx)) <
                      1e-12);
            }
        }
    }
    SUBCASE("rotating party a only leaves s, p, t_bc bitwise unchanged") {
        SplitMix64 rng(6);
        const DensityMatrix rho = random_density(12, 3, 8);
        const CoefficientTensor before = decompose(rho);
        const std::vector<RotationMatrix> rots = {su2_to_so3(haar_unitary(rng)),
                                                  RotationMatrix::identity(),
                                                  RotationMatrix::identity()};
        const CoefficientTensor after = rotate_frame(before, rots);
        for (int idx = 0; idx < 64; ++idx) {
            if (PauliString::from_index(3, idx).label(0) == 0) {
                CHECK(bitwise_equal(after.coefficient(idx), before.coefficient(idx)));
            }
        }
    }
    SUBCASE("purity sum is invariant") {
        SplitMix64 rng(7);
        const DensityMatrix rho = random_density(21, 3, 4);
        const CoefficientTensor before = decompose(rho);
        const std::vector<RotationMatrix> rots = {su2_to_so3(haar_unitary(rng)),
                                                  su2_to_so3(haar_unitary(rng)),
                                                  su2_to_so3(haar_unitary(rng))};
        CHECK(rotate_frame(before, rots).purity_sum() ==
              doctest::Approx(before.purity_sum()).epsilon(1e-10));
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(rotate_frame(ghz, std::vector<RotationMatrix>(2, RotationMatrix::identity())),
                        std::invalid_argument);
        Eigen::Matrix3d skew = Eigen::Matrix3d::Identity();
        skew(0, 1) = 0.1;
        CHECK_THROWS_AS(RotationMatrix{skew}, ValidationError);
    }
}

TEST_CASE("transform_under_local_unitary") {
    const CoefficientTensor ghz = decompose(ghz_density());

    SUBCASE("identity returns the input unchanged") {
        const CoefficientTensor out =
            transform_under_local_unitary(ghz, LocalUnitary(1, Eigen::Matrix2cd::Identity()));
        for (int idx = 0; idx < 64; ++idx) {
            CHECK(bitwise_equal(out.coefficient(idx), ghz.coefficient(idx)));
        }
    }
    SUBCASE("beam splitter on a: t_bc, s, p survive untouched") {
        const CoefficientTensor out =
            transform_under_local_unitary(ghz, LocalUnitary(0, beam_splitter_unitary(0.0)));
        CHECK(out.t_bc()(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((out.t_bc() - ghz.t_bc()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(out.s().norm() == 0.0);
        CHECK(out.p().norm() == 0.0);
    }
    SUBCASE("agrees with the matrix path on random pairs") {
        SplitMix64 rng(8);
        for (int rep = 0; rep < 50; ++rep) {
            const DensityMatrix rho = random_density(100 + rep, 3, 1 + (rep % 8));
            const int party = rep % 3;
            const LocalUnitary u(party, haar_unitary(rng));
            const CoefficientTensor via_coeffs =
                transform_under_local_unitary(decompose(rho), u);
            const CoefficientTensor via_state = decompose(apply_local_unitary(rho, u));
            for (int idx = 0; idx < 64; ++idx) {
                CHECK(std::abs(via_coeffs.coefficient(idx) - via_state.coefficient(idx)) <
                      1e-12);
            }
        }
    }
    SUBCASE("100 random unitaries on b never move o_ac or r") {
        SplitMix64 rng(9);
        for (int rep = 0; rep < 100; ++rep) {
            const CoefficientTensor out =
                transform_under_local_unitary(ghz, LocalUnitary(1, haar_unitary(rng)));
            CHECK((out.o_ac() - ghz.o_ac()).cwiseAbs().maxCoeff() < 1e-15);
            CHECK((out.r() - ghz.r()).cwiseAbs().maxCoeff() < 1e-15);
        }
    }
    SUBCASE("values are shareable across threads") {
        const DensityMatrix rho = random_density(99, 3, 8);
        const CoefficientTensor reference = decompose(rho);
        std::vector<CoefficientTensor> results;
        results.reserve(4);
        for (int i = 0; i < 4; ++i) results.push_back(decompose(rho));
        std::vector<std::thread> workers;
        std::vector<CoefficientTensor*> slots = {&results[0], &results[1], &results[2],
                                                 &results[3]};
        for (int i = 0; i < 4; ++i) {
            workers.emplace_back([&rho, slot = slots[i]] { *slot = decompose(rho); });
        }
        for (auto& w : workers) w.join();
        for (const auto& result : results) {
            for (int idx = 0; idx < 64; ++idx) {
                CHECK(bitwise_equal(result.coefficient(idx), reference.coefficient(idx)));
            }
        }
    }
    SUBCASE("generic unitaries do move the three-party tensor") {
        int moved = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            SplitMix64 rng(seed);
            const CoefficientTensor out =
                transform_under_local_unitary(ghz, LocalUnitary(0, haar_unitary(rng)));
            double max_dev = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k)
                        max_dev = std::max(max_dev, std::abs(out.R(i, j, k) - ghz.R(i, j, k)));
            moved += max_dev > 0.1;
        }
        CHECK(moved >= 99);
    }
}
