#include "nqs/states.hpp"

#include <cmath>
#include <stdexcept>

#include "nqs/csv.hpp"

namespace nqs {

namespace {

const Complex I1(0.0, 1.0);

std::array<ComplexMatrix, 3> paulis() { return {pauli::X(), pauli::Y(), pauli::Z()}; }

}  // namespace

PureState bell(BellState which)
{
    const double r = 1.0 / std::sqrt(2.0);
    switch (which) {
    case BellState::PhiPlus: return PureState({r, 0, 0, r});
    case BellState::PhiMinus: return PureState({r, 0, 0, -r});
    case BellState::PsiPlus: return PureState({0, r, r, 0});
    case BellState::PsiMinus: return PureState({0, r, -r, 0});
    }
    throw std::invalid_argument("bell: unknown state");
}

DensityMatrix BlochQubit::density() const
{
    const double len2 = a1 * a1 + a2 * a2 + a3 * a3;
    if (len2 > 1.0 + 1e-10) throw std::invalid_argument("BlochQubit: vector lies outside the Bloch ball");
    ComplexMatrix m = pauli::I() + pauli::X() * Complex(a1) + pauli::Y() * Complex(a2) + pauli::Z() * Complex(a3);
    return DensityMatrix(m * Complex(0.5));
}

std::array<ComplexMatrix, 8> gell_mann()
{
    const double r3 = 1.0 / std::sqrt(3.0);
    return {
        ComplexMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
        ComplexMatrix{{0, -I1, 0}, {I1, 0, 0}, {0, 0, 0}},
        ComplexMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}},
        ComplexMatrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
        ComplexMatrix{{0, 0, -I1}, {0, 0, 0}, {I1, 0, 0}},
        ComplexMatrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}},
        ComplexMatrix{{0, 0, 0}, {0, 0, -I1}, {0, I1, 0}},
        ComplexMatrix{{r3, 0, 0}, {0, r3, 0}, {0, 0, -2 * r3}},
    };
}

ComplexMatrix BlochQutrit::matrix() const
{
    const auto lam = gell_mann();
    ComplexMatrix m = ComplexMatrix::identity(3);
    for (std::size_t k = 0; k < 8; ++k) m += lam[k] * Complex(std::sqrt(3.0) * n[k]);
    return m * Complex(1.0 / 3.0);
}

DensityMatrix BlochQutrit::density() const
{
    const ComplexMatrix m = matrix();
    const double lowest = herm_eigenvalues(m).back();
    if (lowest < -1e-9)
        throw std::invalid_argument("BlochQutrit: matrix is not positive (smallest eigenvalue " +
                                    std::to_string(lowest) + ")");
    return DensityMatrix::normalized(m);
}

DensityMatrix negative_qubit()
{
    return BlochQubit{0.50, 0.56, -0.66}.density();
}

namespace {

BlochQutrit tabulated_qutrit()
{
    return BlochQutrit{{0.0, 0.0, -0.5, 0.0, 0.0, 0.4, 0.7, -0.3}};
}

}  // namespace

double negative_qutrit_raw_min_eigenvalue()
{
    return herm_eigenvalues(tabulated_qutrit().matrix()).back();
}

DensityMatrix negative_qutrit()
{
    const ComplexMatrix raw = tabulated_qutrit().matrix();
    const EigenSystem es = herm_eigen(raw);
    ComplexMatrix clipped(3, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        if (es.values[k] <= 0.0) continue;
        const ComplexVector v = es.vectors.column(k);
        clipped += ComplexMatrix::projector(v) * Complex(es.values[k]);
    }
    return DensityMatrix::normalized(clipped);
}

PureState two_qubit_negative(NegativeState which)
{
    const double k = 1.0 / std::sqrt(2.0);
    switch (which) {
    case NegativeState::NS1:
        return PureState::normalized({-0.743, -0.357 * (1.0 - I1), 0.102 * (1.0 + I1), -0.414});
    case NegativeState::NS2:
        return PureState::normalized({0.788, -0.288 * (1.0 - I1), -0.288 * (1.0 + I1), -0.211});
    case NegativeState::NS3:
        return PureState::normalized({-0.0508, 0.631 - 0.228 * I1, -0.279 - 0.682 * I1, 0.0508});
    case NegativeState::NS3p:
        return PureState::normalized({-0.575, -0.346 + 0.310 * I1, -0.265 - 0.229 * I1, 0.575});
    case NegativeState::NS3pp:
        return PureState::normalized({0.0, k * I1, k, 0.0});
    }
    throw std::invalid_argument("two_qubit_negative: unknown state");
}

PureState ns_from_operator(const PhasePointOperator& a, int rank)
{
    if (rank < 1) throw std::invalid_argument("ns_from_operator: rank starts at 1");
    const auto& vals = a.eigen.values;
    const std::size_t n = vals.size();
    int negatives = 0;
    for (double v : vals)
        if (v < 0.0) ++negatives;
    if (rank > negatives)
        throw std::invalid_argument("ns_from_operator: operator has " + std::to_string(negatives) +
                                    " negative eigenvalues, rank " + std::to_string(rank) + " requested");
    // values are descending, so the most negative sits last
    return PureState::normalized(a.eigen.vectors.column(n - std::size_t(rank)));
}

double negative_eigenspace_residual(const PhasePointOperator& a, const PureState& psi)
{
    const std::size_t n = a.eigen.values.size();
    if (psi.dim() != n) throw std::invalid_argument("negative_eigenspace_residual: dimension mismatch");
    ComplexVector proj(n, Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
        if (a.eigen.values[k] >= 0.0) continue;
        const ComplexVector v = a.eigen.vectors.column(k);
        const Complex c = inner(v, psi.amplitudes());
        for (std::size_t i = 0; i < n; ++i) proj[i] += c * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) proj[i] -= psi[i];
    return norm(proj);
}

TwoQubitDecomposition decompose_two_qubit(const DensityMatrix& rho)
{
    if (rho.dim() != 4) throw std::invalid_argument("decompose_two_qubit: expected a 4x4 state");
    const auto s = paulis();
    const ComplexMatrix id = pauli::I();
    TwoQubitDecomposition d;
    for (int i = 0; i < 3; ++i) {
        d.a[i] = (rho.matrix() * tensor(s[i], id)).trace().real();
        d.s[i] = (rho.matrix() * tensor(id, s[i])).trace().real();
        for (int j = 0; j < 3; ++j) d.T[i][j] = (rho.matrix() * tensor(s[i], s[j])).trace().real();
    }
    return d;
}

ComplexMatrix reassemble(const TwoQubitDecomposition& d)
{
    const auto s = paulis();
    const ComplexMatrix id = pauli::I();
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (int i = 0; i < 3; ++i) {
        m += tensor(s[i], id) * Complex(d.a[i]);
        m += tensor(id, s[i]) * Complex(d.s[i]);
        for (int j = 0; j < 3; ++j) m += tensor(s[i], s[j]) * Complex(d.T[i][j]);
    }
    return m * Complex(0.25);
}

std::string state_csv(const PureState& psi)
{
    CsvWriter csv({"re", "im"});
    for (const auto& z : psi.amplitudes()) csv.row({format_real(z.real()), format_real(z.imag())});
    return csv.str();
}

}  // namespace nqs
