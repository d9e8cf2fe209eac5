#include "nqs/numerics/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nqs/numerics/linalg.hpp"

namespace nqs {

PureState::PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes))
{
    if (amps_.empty()) throw std::invalid_argument("PureState: empty amplitude vector");
    const double n = norm(amps_);
    if (!std::isfinite(n) || std::abs(n * n - 1.0) > kNormTol)
        throw std::invalid_argument("PureState: amplitudes are not unit norm (norm^2 = " + std::to_string(n * n) + ")");
}

PureState PureState::normalized(ComplexVector amplitudes)
{
    const double n = norm(amplitudes);
    if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("PureState: cannot normalize a zero vector");
    for (auto& z : amplitudes) z /= n;
    return PureState(std::move(amplitudes));
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m)
{
    if (!m.square() || m.rows() == 0) throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
    if (!m.all_finite()) throw std::invalid_argument("DensityMatrix: non-finite entry");
    const double herr = m.hermiticity_error();
    if (herr > kHermitianTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian (error " + std::to_string(herr) + ")");
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    const double tr = h.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace is " + std::to_string(tr) + ", expected 1");
    const auto ev = herm_eigenvalues(h);
    if (ev.back() < -kPsdTol)
        throw std::invalid_argument("DensityMatrix: smallest eigenvalue " + std::to_string(ev.back()) + " is negative");
    m_ = std::move(h);
}

DensityMatrix::DensityMatrix(const PureState& psi) : DensityMatrix(ComplexMatrix::projector(psi.amplitudes()))
{
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim)
{
    return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / double(dim)));
}

DensityMatrix DensityMatrix::normalized(const ComplexMatrix& m)
{
    if (!m.square()) throw std::invalid_argument("DensityMatrix: matrix must be square");
    const double tr = m.trace().real();
    if (!(tr > 0.0)) throw std::invalid_argument("DensityMatrix: cannot normalize a matrix with non-positive trace");
    return DensityMatrix(m * Complex(1.0 / tr));
}

}  // namespace nqs
