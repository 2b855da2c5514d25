#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ghzhs/errors.hpp"
#include "ghzhs/hsdecomp.hpp"
#include "ghzhs/interferometer.hpp"
#include "ghzhs/io.hpp"
#include "ghzhs/locality.hpp"
#include "ghzhs/qstate.hpp"

// Exit codes: 0 success/pass, 1 verification fail, 2 usage or parse error,
// 3 validation error, 4 I/O error.

namespace {

using namespace ghzhs;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

int party_index(const std::string& letter) {
    if (letter.size() == 1 && letter[0] >= 'a' && letter[0] < 'a' + kMaxParties) {
        return letter[0] - 'a';
    }
    throw std::invalid_argument("party must be a single letter a.." +
                                std::string(1, 'a' + kMaxParties - 1));
}

// Open `path` for writing, or fall back to stdout when empty.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) : path_(path) {
        if (!path_.empty()) {
            file_.open(path_);
            if (!file_) throw IoError("cannot open '" + path_ + "' for writing");
        }
    }

    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    bool is_file() const { return !path_.empty(); }

    void finish() {
        if (path_.empty()) {
            std::cout.flush();
            return;
        }
        file_.flush();
        if (!file_) throw IoError("error writing '" + path_ + "'");
    }

  private:
    std::string path_;
    std::ofstream file_;
};

void print_vector(std::ostream& out, const char* name, const Eigen::Vector3d& v) {
    out << "  " << name << " = (" << compact(v(0)) << ", " << compact(v(1)) << ", "
        << compact(v(2)) << ")\n";
}

void print_matrix_nonzeros(std::ostream& out, const char* name, const Eigen::Matrix3d& m) {
    out << "  " << name << ":";
    bool any = false;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (m(i, j) != 0.0) {
                out << " (" << i + 1 << "," << j + 1 << ")=" << compact(m(i, j));
                any = true;
            }
        }
    }
    if (!any) out << " all zero";
    out << "\n";
}

void print_block_summary(std::ostream& out, const CoefficientTensor& coeffs) {
    out << "named blocks (axes 1..3 = sigma_1..sigma_3):\n";
    out << "  unit = " << compact(coeffs.unit()) << "\n";
    print_vector(out, "r", coeffs.r());
    print_vector(out, "s", coeffs.s());
    print_vector(out, "p", coeffs.p());
    print_matrix_nonzeros(out, "q_ab", coeffs.q_ab());
    print_matrix_nonzeros(out, "o_ac", coeffs.o_ac());
    print_matrix_nonzeros(out, "t_bc", coeffs.t_bc());
    out << "  R:";
    bool any = false;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                if (coeffs.R(i, j, k) != 0.0) {
                    out << " (" << i + 1 << "," << j + 1 << "," << k + 1
                        << ")=" << compact(coeffs.R(i, j, k));
                    any = true;
                }
            }
        }
    }
    if (!any) out << " all zero";
    out << "\n";
}

int run_decompose(const std::string& input, const std::string& output) {
    const DensityMatrix rho = io::read_density_matrix(input);
    const CoefficientTensor coeffs = decompose(rho);
    OutputTarget target(output);
    io::write_coefficients(target.stream(), coeffs);
    target.finish();
    if (rho.n_parties() == 3) {
        // Keep the machine-readable record stream clean when it goes to
        // stdout; the summary moves to stderr in that case.
        print_block_summary(target.is_file() ? std::cout : std::cerr, coeffs);
    }
    return 0;
}

int run_reconstruct(const std::string& input, const std::string& output) {
    const CoefficientTensor coeffs = io::read_coefficients(input);
    const DensityMatrix rho = reconstruct_density(coeffs);
    OutputTarget target(output);
    io::write_density_matrix(target.stream(), rho);
    target.finish();
    return 0;
}

int run_scan(int points, const std::string& output) {
    OutputTarget target(output);
    std::ostream& out = target.stream();
    out << "phi1,phi2,phi3,E,closed_form,abs_error\n";
    const double step = 2.0 * std::numbers::pi / (points - 1);
    auto emit = [&out](double phi1, double phi2, double phi3) {
        const double e = correlation(PhaseSettings(phi1, phi2, phi3));
        const double closed = std::sin(phi1 + phi2 + phi3);
        out << io::format_double(phi1) << ',' << io::format_double(phi2) << ','
            << io::format_double(phi3) << ',' << io::format_double(e) << ','
            << io::format_double(closed) << ',' << io::format_double(std::abs(e - closed))
            << '\n';
    };
    for (int i = 0; i < points; ++i) {
        emit(i * step, 0.0, 0.0);  // all of the sum on arm 1
    }
    for (int i = 0; i < points; ++i) {
        const double third = i * step / 3.0;
        emit(third, third, third);  // symmetric split
    }
    target.finish();
    return 0;
}

int run_ghsz() {
    const GhszReport report = ghsz_contradiction_report();
    std::cout << "phi1,phi2,phi3,E\n";
    for (int i = 0; i < 4; ++i) {
        const PhaseSettings& s = report.settings[i];
        std::cout << fixed6(s.phi1) << ',' << fixed6(s.phi2) << ',' << fixed6(s.phi3) << ','
                  << fixed6(report.correlations[i]) << '\n';
    }
    std::cout << "product," << fixed6(report.product) << '\n';
    std::cout << "local_realist_fourth," << fixed6(report.local_realist_fourth) << '\n';
    std::cout << "max_lhv_constraints_satisfied," << report.max_lhv_constraints << '\n';
    std::cout << "flag," << (report.contradiction ? "CONTRADICTION" : "CONSISTENT") << '\n';
    return 0;
}

int run_verify_locality(const std::string& input, const std::string& party, int trials,
                        std::uint64_t seed, double tol, bool identity_only) {
    const DensityMatrix rho = io::read_density_matrix(input);
    const LocalitySweepReport report =
        locality_sweep(rho, party_index(party), trials, seed, tol, identity_only);
    std::cout << "party," << party << '\n';
    std::cout << "trials," << report.n_trials << '\n';
    std::cout << "seed," << report.seed << '\n';
    std::cout << "tol," << compact(report.tolerance) << '\n';
    std::cout << "unitaries," << (identity_only ? "identity" : "haar") << '\n';
    std::cout << "worst_unchanged_deviation," << io::format_double(report.worst_unchanged_deviation)
              << '\n';
    std::cout << "worst_changed_deviation," << io::format_double(report.worst_changed_deviation)
              << '\n';
    std::cout << "marginal_deviation," << io::format_double(report.worst_marginal_deviation)
              << '\n';
    std::cout << "verdict," << (report.pass ? "pass" : "fail") << '\n';
    return report.pass ? 0 : 1;
}

int run_sample(double phi1, double phi2, double phi3, std::uint64_t count, std::uint64_t seed) {
    const PhaseSettings settings(phi1, phi2, phi3);
    const auto counts = sample_outcomes(settings, count, seed);
    const double exact = correlation(settings);

    std::cout << "outcome,count\n";
    double empirical = 0.0;
    for (int x = 0; x < 8; ++x) {
        std::cout << outcome_label(x) << ',' << counts[x] << '\n';
        const int sign = ((x >> 2) ^ (x >> 1) ^ x) & 1 ? -1 : 1;
        empirical += double(sign) * double(counts[x]);
    }
    empirical /= double(count);
    const double variance = std::max(0.0, 1.0 - exact * exact);
    const double se = std::sqrt(variance / double(count));
    const double z = se > 0.0 ? (empirical - exact) / se : (empirical == exact ? 0.0 : INFINITY);
    std::cout << "total," << count << '\n';
    std::cout << "empirical_E," << io::format_double(empirical) << '\n';
    std::cout << "exact_E," << io::format_double(exact) << '\n';
    std::cout << "z_score," << io::format_double(z) << '\n';
    return 0;
}

int run_validate(const std::string& input) {
    const DensityMatrix rho = io::read_density_matrix(input);
    std::cout << "file," << input << '\n';
    std::cout << "n_parties," << rho.n_parties() << '\n';
    std::cout << "purity," << io::format_double(rho.purity()) << '\n';
    std::cout << "status,valid\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GHZ states in the Hilbert-Schmidt (Pauli) decomposition: "
                 "decomposition, interferometer simulation, locality checks"};
    app.require_subcommand(1);

    std::string input, output, party = "a";
    int points = 101, trials = 100;
    std::uint64_t seed = 0, count = 1000000;
    double tol = 1e-12, phi1 = 0.0, phi2 = 0.0, phi3 = 0.0;
    bool identity_only = false;

    auto* cmd_decompose =
        app.add_subcommand("decompose", "Pauli coefficients of a density matrix file");
    cmd_decompose->add_option("--input", input, "density matrix file")->required();
    cmd_decompose->add_option("--output", output, "coefficient file (default: stdout)");

    auto* cmd_reconstruct =
        app.add_subcommand("reconstruct", "density matrix of a coefficient file");
    cmd_reconstruct->add_option("--input", input, "coefficient file")->required();
    cmd_reconstruct->add_option("--output", output, "density matrix file (default: stdout)");

    auto* cmd_scan = app.add_subcommand(
        "scan", "correlation E vs the closed form sin(phi1+phi2+phi3) over a phase grid");
    cmd_scan->add_option("--points", points, "grid points over [0, 2*pi]")
        ->check(CLI::Range(2, 1000000));
    cmd_scan->add_option("--output", output, "CSV file (default: stdout)");

    auto* cmd_ghsz =
        app.add_subcommand("ghsz", "four-setting perfect-correlation contradiction report");

    auto* cmd_verify = app.add_subcommand(
        "verify-locality", "check that one-party unitaries leave the other parties' blocks fixed");
    cmd_verify->add_option("--input", input, "density matrix file")->required();
    cmd_verify->add_option("--party", party, "acted party letter (default a)");
    cmd_verify->add_option("--trials", trials, "number of random unitaries")
        ->check(CLI::Range(1, 1000000));
    cmd_verify->add_option("--seed", seed, "RNG seed");
    cmd_verify->add_option("--tol", tol, "pass tolerance")->check(CLI::PositiveNumber);
    cmd_verify->add_flag("--identity", identity_only, "use identity unitaries instead");

    auto* cmd_sample = app.add_subcommand("sample", "draw detector triples from the distribution");
    cmd_sample->add_option("--phi1", phi1, "arm 1 phase (radians)");
    cmd_sample->add_option("--phi2", phi2, "arm 2 phase (radians)");
    cmd_sample->add_option("--phi3", phi3, "arm 3 phase (radians)");
    cmd_sample->add_option("--count", count, "number of samples")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(1) << 62));
    cmd_sample->add_option("--seed", seed, "RNG seed");

    auto* cmd_validate = app.add_subcommand("validate", "check a density matrix file's invariants");
    cmd_validate->add_option("--input", input, "density matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_decompose)) return run_decompose(input, output);
        if (app.got_subcommand(cmd_reconstruct)) return run_reconstruct(input, output);
        if (app.got_subcommand(cmd_scan)) return run_scan(points, output);
        if (app.got_subcommand(cmd_ghsz)) return run_ghsz();
        if (app.got_subcommand(cmd_verify))
            return run_verify_locality(input, party, trials, seed, tol, identity_only);
        if (app.got_subcommand(cmd_sample)) return run_sample(phi1, phi2, phi3, count, seed);
        if (app.got_subcommand(cmd_validate)) return run_validate(input);
    } catch (const FormatError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
