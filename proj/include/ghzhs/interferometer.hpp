#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace ghzhs {

// Per-arm phase shifts in radians. Any finite value is legal; 2*pi
// periodicity is a tested property, not a precondition.
struct PhaseSettings {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phi3 = 0.0;

    PhaseSettings() = default;
    PhaseSettings(double phi1, double phi2, double phi3);

    double phi(int arm) const;
    double sum() const { return phi1 + phi2 + phi3; }
};

// Probabilities over the 8 detector triples; index = 4 x_a + 2 x_b + x_c
// with x = 0 for the unprimed detector (d, e, f) and 1 for the primed one.
class OutcomeDistribution {
  public:
    explicit OutcomeDistribution(std::array<double, 8> probabilities);

    const std::array<double, 8>& probabilities() const { return probs_; }
    double probability(int outcome) const { return probs_.at(outcome); }

    // Detector values: +1 unprimed, -1 primed. E = sum_x p(x) v_a v_b v_c.
    double correlation() const;

  private:
    std::array<double, 8> probs_;
};

// "ddf'" style label for an outcome index.
std::string outcome_label(int outcome);

// Eq.-(9)-packaged phase shift + 50-50 beam splitter:
// (1/sqrt 2) [[1, -i e^{-i phi}], [-i, e^{-i phi}]].
Eigen::Matrix2cd beam_splitter_unitary(double phi);

// Sends the GHZ state through the three arms (|a> -> (|d> + i|d'>)/sqrt 2,
// |a'> -> e^{i phi}(|d'> + i|d>)/sqrt 2 per arm) and returns the
// squared-magnitude probabilities in the detector basis.
OutcomeDistribution evolve_ghz(const PhaseSettings& settings);

// Three-party correlation of evolve_ghz(settings); not hard-coded to the
// sin(phi1+phi2+phi3) closed form, which the test suite establishes against
// a brute-force amplitude oracle instead.
double correlation(const PhaseSettings& settings);

// The four perfect-correlation settings and what they force on any
// deterministic local assignment.
struct GhszReport {
    std::array<PhaseSettings, 4> settings;
    std::array<double, 4> correlations;
    double product = 0.0;
    // The fourth-setting product forced by the first three perfect
    // correlations, derived by enumerating all 64 assignments of the six
    // dichotomic hidden values.
    double local_realist_fourth = 0.0;
    // Most constraints any single assignment satisfies (3 of 4).
    int max_lhv_constraints = 0;
    bool contradiction = false;
};

GhszReport ghsz_contradiction_report();

// count i.i.d. draws from evolve_ghz(settings) by inverse CDF over the 8
// outcomes; deterministic in seed (splitmix64).
std::array<std::uint64_t, 8> sample_outcomes(const PhaseSettings& settings, std::uint64_t count,
                                             std::uint64_t seed);

}  // namespace ghzhs
