#include "ghzhs/locality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ghzhs/rng.hpp"

namespace ghzhs {

namespace {

double worst_of(const std::vector<BlockDeviation>& blocks) {
    double worst = 0.0;
    for (const auto& b : blocks) worst = std::max(worst, b.max_abs_deviation);
    return worst;
}

}  // namespace

double LocalityReport::worst_unchanged() const { return worst_of(unchanged_blocks); }
double LocalityReport::worst_changed() const { return worst_of(changed_blocks); }

std::string block_name(int n_parties, unsigned party_mask) {
    if (party_mask == 0) return "unit";
    if (n_parties == 3) {
        switch (party_mask) {
            case 0b100: return "r";
            case 0b010: return "s";
            case 0b001: return "p";
            case 0b110: return "q_ab";
            case 0b101: return "o_ac";
            case 0b011: return "t_bc";
            case 0b111: return "R";
            default: break;
        }
    }
    std::string name;
    for (int p = 0; p < n_parties; ++p) {
        if (party_mask & (1u << (n_parties - 1 - p))) name.push_back(char('a' + p));
    }
    return name;
}

LocalityReport verify_locality(const DensityMatrix& rho, const LocalUnitary& u, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const int n = rho.n_parties();
    if (u.party() >= n) {
        throw std::out_of_range("party index " + std::to_string(u.party()) +
                                " out of range for " + std::to_string(n) + " parties");
    }

    const CoefficientTensor before = decompose(rho);
    const DensityMatrix rotated = apply_local_unitary(rho, u);
    const CoefficientTensor after = decompose(rotated);

    // Group coefficients by which parties carry a non-identity label.
    std::vector<double> block_dev(1u << n, 0.0);
    for (int idx = 0; idx < before.size(); ++idx) {
        unsigned mask = 0;
        for (int p = 0; p < n; ++p) {
            const int label = (idx >> (2 * (n - 1 - p))) & 3;
            if (label != 0) mask |= 1u << (n - 1 - p);
        }
        const double dev = std::abs(after.coefficient(idx) - before.coefficient(idx));
        block_dev[mask] = std::max(block_dev[mask], dev);
    }

    LocalityReport report;
    report.acted_party = u.party();
    report.tolerance = tol;
    const unsigned acted_bit = 1u << (n - 1 - u.party());
    for (unsigned mask = 0; mask < block_dev.size(); ++mask) {
        BlockDeviation entry{block_name(n, mask), block_dev[mask]};
        if (mask & acted_bit) {
            report.changed_blocks.push_back(std::move(entry));
        } else {
            report.unchanged_blocks.push_back(std::move(entry));
        }
    }

    if (n == 1) {
        report.marginal_deviation = 0.0;  // no complementary subsystem
    } else {
        std::vector<int> keep;
        for (int p = 0; p < n; ++p) {
            if (p != u.party()) keep.push_back(p);
        }
        const DensityMatrix marg_before = partial_trace(rho, keep);
        const DensityMatrix marg_after = partial_trace(rotated, keep);
        report.marginal_deviation =
            (marg_after.entries() - marg_before.entries()).cwiseAbs().maxCoeff();
    }

    report.pass = report.worst_unchanged() < tol && report.marginal_deviation < tol;
    return report;
}

LocalitySweepReport locality_sweep(const DensityMatrix& rho, int party, int n_trials,
                                   std::uint64_t seed, double tol, bool identity_only) {
    if (n_trials < 1) {
        throw std::invalid_argument("n_trials must be at least 1");
    }
    LocalitySweepReport agg;
    agg.acted_party = party;
    agg.n_trials = n_trials;
    agg.seed = seed;
    agg.tolerance = tol;
    agg.pass = true;
    for (int trial = 0; trial < n_trials; ++trial) {
        Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
        if (!identity_only) {
            SplitMix64 rng(seed + std::uint64_t(trial));  // derived-seed rule
            u = haar_unitary(rng);
        }
        const LocalityReport report = verify_locality(rho, LocalUnitary(party, u), tol);
        agg.worst_unchanged_deviation =
            std::max(agg.worst_unchanged_deviation, report.worst_unchanged());
        agg.worst_marginal_deviation =
            std::max(agg.worst_marginal_deviation, report.marginal_deviation);
        agg.worst_changed_deviation =
            std::max(agg.worst_changed_deviation, report.worst_changed());
        agg.pass = agg.pass && report.pass;
    }
    return agg;
}

}  // namespace ghzhs
