#pragma once

#include <vector>

#include "nqs/numerics/matrix.hpp"

namespace nqs {

using Basis = std::vector<ComplexVector>;

// The tabulated mutually unbiased bases for N = 2, 3, 4, normalized, in
// table order (basis k is the table's striation k+1).
std::vector<Basis> mub_tables(int n);

// max over basis pairs of | |<u|v>|^2 - expected |, expected = delta within a
// basis and 1/N across bases.
double mub_defect(const std::vector<Basis>& bases);

}  // namespace nqs
