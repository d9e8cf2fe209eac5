#pragma once

#include <array>
#include <vector>

#include "nqs/numerics/matrix.hpp"

namespace nqs {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

// Trace out every factor not listed in `keep`. dims are the subsystem sizes
// in tensor order; keep is a list of factor indices (order ignored).
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column i belongs to values[i]
};

// Throws std::invalid_argument when the input is not Hermitian to 1e-10.
// Each eigenvector is rotated so that its largest-magnitude component is
// real and positive; among near-equal magnitudes the lowest index wins.
EigenSystem herm_eigen(const ComplexMatrix& h);
std::vector<double> herm_eigenvalues(const ComplexMatrix& h);

void canonicalize_phase(ComplexVector& v);

// Eigenvalues in [-1e-8, 0) are clamped to zero; anything lower throws.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

// Descending singular values of a general complex matrix.
std::vector<double> singular_values(const ComplexMatrix& m);

// Real 3x3 helpers used for correlation matrices.
using Real3 = std::array<double, 3>;
using Real3x3 = std::array<Real3, 3>;

double det3(const Real3x3& t);
// Moduli of the (possibly complex) eigenvalues, descending.
Real3 eigen_moduli3(const Real3x3& t);
Real3 singular_values3(const Real3x3& t);
Real3 symmetric_eigenvalues3(const Real3x3& s);  // descending

}  // namespace nqs
