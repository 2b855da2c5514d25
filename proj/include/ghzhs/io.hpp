#pragma once

#include <iosfwd>
#include <string>

#include "ghzhs/errors.hpp"
#include "ghzhs/hsdecomp.hpp"
#include "ghzhs/qstate.hpp"

// Line-oriented text formats. Density matrix (.dm): a "n_parties N" header,
// then 2^n rows of 2^n "re im" pairs. Coefficients (.coeffs): the header,
// then 4^n "STRING value" records over the alphabet {I,X,Y,Z} in party
// order, written in lexicographic order (I < X < Y < Z). '#' starts a
// comment; numbers are serialized with 17 significant digits so round trips
// are lossless at double precision.

namespace ghzhs::io {

std::string format_double(double v);

DensityMatrix parse_density_matrix(std::istream& in, const std::string& source);
DensityMatrix read_density_matrix(const std::string& path);
void write_density_matrix(std::ostream& out, const DensityMatrix& rho);
void write_density_matrix(const std::string& path, const DensityMatrix& rho);

CoefficientTensor parse_coefficients(std::istream& in, const std::string& source);
CoefficientTensor read_coefficients(const std::string& path);
void write_coefficients(std::ostream& out, const CoefficientTensor& coeffs);
void write_coefficients(const std::string& path, const CoefficientTensor& coeffs);

}  // namespace ghzhs::io
