#pragma once

#include "nqs/numerics/matrix.hpp"

namespace nqs {

class PureState {
public:
    static constexpr double kNormTol = 1e-12;

    // Throws unless | ||psi||^2 - 1 | <= kNormTol.
    explicit PureState(ComplexVector amplitudes);
    // Rescales to unit norm; throws on a zero vector.
    static PureState normalized(ComplexVector amplitudes);

    std::size_t dim() const { return amps_.size(); }
    const ComplexVector& amplitudes() const { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

private:
    ComplexVector amps_;
};

class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kPsdTol = 1e-10;

    // Validates all three invariants and throws std::invalid_argument on
    // failure. The stored matrix is the exact Hermitian part of the input.
    explicit DensityMatrix(const ComplexMatrix& m);
    DensityMatrix(const PureState& psi);  // NOLINT: a pure state is a density matrix

    static DensityMatrix maximally_mixed(std::size_t dim);
    // Divides by the trace first; for pipeline outputs that are valid up to
    // normalization.
    static DensityMatrix normalized(const ComplexMatrix& m);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }
    Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

private:
    ComplexMatrix m_;
};

}  // namespace nqs
