#include "ghzhs/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ghzhs::io {

namespace {

// Reads significant lines (comments and blank lines skipped), tracking the
// 1-based line number for diagnostics.
class LineReader {
  public:
    LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
            out = raw;
            return true;
        }
        return false;
    }

    int line() const { return line_; }
    const std::string& source() const { return source_; }

    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError(source_ + ":" + std::to_string(line_) + ": " + what, line_);
    }

  private:
    std::istream& in_;
    std::string source_;
    int line_ = 0;
};

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_number(const LineReader& reader, const std::string& tok, int column) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size()) {
        reader.fail("column " + std::to_string(column) + ": '" + tok + "' is not a number");
    }
    return value;
}

int parse_header(LineReader& reader) {
    std::string line;
    if (!reader.next(line)) reader.fail("missing 'n_parties' header");
    const auto tokens = tokenize(line);
    if (tokens.size() != 2 || tokens[0] != "n_parties") {
        reader.fail("expected header 'n_parties N'");
    }
    const double n = parse_number(reader, tokens[1], 2);
    if (n < 1 || n > kMaxParties || n != int(n)) {
        reader.fail("n_parties must be an integer in 1.." + std::to_string(kMaxParties));
    }
    return int(n);
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

DensityMatrix parse_density_matrix(std::istream& in, const std::string& source) {
    LineReader reader(in, source);
    const int n = parse_header(reader);
    const int dim = 1 << n;

    Eigen::MatrixXcd m(dim, dim);
    for (int row = 0; row < dim; ++row) {
        std::string line;
        if (!reader.next(line)) {
            reader.fail("unexpected end of file: expected matrix row " + std::to_string(row));
        }
        const auto tokens = tokenize(line);
        if (static_cast<int>(tokens.size()) != 2 * dim) {
            reader.fail("matrix row " + std::to_string(row) + " has " +
                        std::to_string(tokens.size()) + " numbers, expected " +
                        std::to_string(2 * dim) + " (re im pairs)");
        }
        for (int col = 0; col < dim; ++col) {
            const double re = parse_number(reader, tokens[2 * col], 2 * col + 1);
            const double im = parse_number(reader, tokens[2 * col + 1], 2 * col + 2);
            m(row, col) = {re, im};
        }
    }
    std::string extra;
    if (reader.next(extra)) {
        reader.fail("trailing content after " + std::to_string(dim) + " matrix rows");
    }
    return DensityMatrix(n, std::move(m));
}

DensityMatrix read_density_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return parse_density_matrix(in, path);
}

void write_density_matrix(std::ostream& out, const DensityMatrix& rho) {
    out << "# density matrix: one row per line, entries as re im pairs\n";
    out << "n_parties " << rho.n_parties() << "\n";
    const int dim = rho.dim();
    for (int row = 0; row < dim; ++row) {
        for (int col = 0; col < dim; ++col) {
            if (col > 0) out << ' ';
            out << format_double(rho.entries()(row, col).real()) << ' '
                << format_double(rho.entries()(row, col).imag());
        }
        out << '\n';
    }
}

void write_density_matrix(const std::string& path, const DensityMatrix& rho) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_density_matrix(out, rho);
    out.flush();
    if (!out) throw IoError("error writing '" + path + "'");
}

CoefficientTensor parse_coefficients(std::istream& in, const std::string& source) {
    LineReader reader(in, source);
    const int n = parse_header(reader);
    const int count = 1 << (2 * n);

    std::vector<double> coeffs(count, 0.0);
    std::vector<bool> seen(count, false);
    for (int rec = 0; rec < count; ++rec) {
        std::string line;
        if (!reader.next(line)) {
            reader.fail("unexpected end of file: expected " + std::to_string(count) +
                        " records, got " + std::to_string(rec));
        }
        const auto tokens = tokenize(line);
        if (tokens.size() != 2) {
            reader.fail("expected 'STRING value' record");
        }
        int idx = 0;
        try {
            const PauliString s = PauliString::from_string(tokens[0]);
            if (s.n_parties() != n) {
                reader.fail("Pauli string '" + tokens[0] + "' has " +
                            std::to_string(s.n_parties()) + " labels, expected " +
                            std::to_string(n));
            }
            idx = s.index();
        } catch (const std::invalid_argument& e) {
            reader.fail(e.what());
        }
        if (seen[idx]) {
            reader.fail("duplicate record for '" + tokens[0] + "'");
        }
        seen[idx] = true;
        coeffs[idx] = parse_number(reader, tokens[1], 2);
    }
    std::string extra;
    if (reader.next(extra)) {
        reader.fail("trailing content after " + std::to_string(count) + " records");
    }
    return CoefficientTensor(n, std::move(coeffs));
}

CoefficientTensor read_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return parse_coefficients(in, path);
}

void write_coefficients(std::ostream& out, const CoefficientTensor& coeffs) {
    out << "# Pauli-basis coefficients, lexicographic over I < X < Y < Z\n";
    out << "n_parties " << coeffs.n_parties() << "\n";
    for (int idx = 0; idx < coeffs.size(); ++idx) {
        out << PauliString::from_index(coeffs.n_parties(), idx).str() << ' '
            << format_double(coeffs.coefficient(idx)) << '\n';
    }
}

void write_coefficients(const std::string& path, const CoefficientTensor& coeffs) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_coefficients(out, coeffs);
    out.flush();
    if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace ghzhs::io
