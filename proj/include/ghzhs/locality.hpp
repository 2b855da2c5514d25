#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghzhs/hsdecomp.hpp"
#include "ghzhs/qstate.hpp"

namespace ghzhs {

struct BlockDeviation {
    std::string block;
    double max_abs_deviation = 0.0;
};

// Executable form of the locality claim: after a unitary on one party,
// every coefficient block whose strings are identity at that party must be
// unchanged, as must the reduced state of the remaining parties. Blocks
// involving the acted party are classified "changed" structurally, even if
// a special unitary happens to leave them numerically still.
struct LocalityReport {
    int acted_party = 0;
    double tolerance = 0.0;
    std::vector<BlockDeviation> unchanged_blocks;
    std::vector<BlockDeviation> changed_blocks;
    double marginal_deviation = 0.0;
    bool pass = false;

    double worst_unchanged() const;
    double worst_changed() const;
};

// Block naming: for three parties the paper's names (unit, r, s, p, q_ab,
// o_ac, t_bc, R); otherwise the involved party letters ("bc", ...).
std::string block_name(int n_parties, unsigned party_mask);

LocalityReport verify_locality(const DensityMatrix& rho, const LocalUnitary& u, double tol);

struct LocalitySweepReport {
    int acted_party = 0;
    int n_trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double worst_unchanged_deviation = 0.0;
    double worst_marginal_deviation = 0.0;
    double worst_changed_deviation = 0.0;  // informational
    bool pass = false;
};

// n_trials seeded Haar-random unitaries on `party` (trial i draws from seed
// + i, so sharded runs agree with sequential ones); identity_only swaps
// every trial's unitary for the identity.
LocalitySweepReport locality_sweep(const DensityMatrix& rho, int party, int n_trials,
                                   std::uint64_t seed, double tol, bool identity_only = false);

}  // namespace ghzhs
