#pragma once

#include <array>
#include <string>

#include "nqs/numerics/density.hpp"
#include "nqs/numerics/linalg.hpp"
#include "nqs/phase_space/wigner.hpp"

namespace nqs {

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
enum class NegativeState { NS1, NS2, NS3, NS3p, NS3pp };

PureState bell(BellState which);

struct BlochQubit {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;

    // Throws when the Bloch vector is longer than 1 + 1e-10.
    DensityMatrix density() const;
};

// rho = (I + sqrt(3) n.lambda) / 3 with the standard Gell-Mann matrices.
struct BlochQutrit {
    std::array<double, 8> n{};

    // Hermitian and unit trace, positivity not checked.
    ComplexMatrix matrix() const;
    // Throws when the smallest eigenvalue is below -1e-9.
    DensityMatrix density() const;
};

std::array<ComplexMatrix, 8> gell_mann();

// Bloch vector (0.50, 0.56, -0.66).
DensityMatrix negative_qubit();
// The tabulated qutrit Bloch vector. Its rounded coefficients leave a
// negative eigenvalue near -0.055, so the matrix is projected onto the
// nearest state by clipping negative eigenvalues and renormalizing.
DensityMatrix negative_qutrit();
// Smallest eigenvalue of the unclipped tabulated qutrit matrix.
double negative_qutrit_raw_min_eigenvalue();

// The tabulated three-decimal vectors, renormalized.
PureState two_qubit_negative(NegativeState which);

// Eigenvector of the rank-th most negative eigenvalue (rank starts at 1).
PureState ns_from_operator(const PhasePointOperator& a, int rank);

// || P_neg psi - psi || where P_neg projects onto the span of the negative
// eigenvectors of the operator.
double negative_eigenspace_residual(const PhasePointOperator& a, const PureState& psi);

struct TwoQubitDecomposition {
    Real3 a{};    // Tr[rho (sigma_i x I)]
    Real3 s{};    // Tr[rho (I x sigma_j)]
    Real3x3 T{};  // Tr[rho (sigma_i x sigma_j)]
};

TwoQubitDecomposition decompose_two_qubit(const DensityMatrix& rho);
// (I + a.sigma x I + I x s.sigma + sum T_ij sigma_i x sigma_j) / 4
ComplexMatrix reassemble(const TwoQubitDecomposition& d);

// Header re,im; one row per amplitude.
std::string state_csv(const PureState& psi);

}  // namespace nqs
