#pragma once

#include <cmath>
#include <random>

#include "nqs/numerics/density.hpp"
#include "nqs/numerics/linalg.hpp"

namespace nqs::test {

// Fixed seeds everywhere; failures reproduce exactly.
inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline ComplexVector random_vector(std::size_t n, std::mt19937_64& gen = rng())
{
    std::normal_distribution<double> g;
    ComplexVector v(n);
    for (auto& z : v) z = Complex(g(gen), g(gen));
    return v;
}

inline PureState random_pure(std::size_t n, std::mt19937_64& gen = rng())
{
    return PureState::normalized(random_vector(n, gen));
}

// Ginibre ensemble: G G^dagger / Tr, full rank with probability one.
inline DensityMatrix random_mixed(std::size_t n, std::mt19937_64& gen = rng())
{
    ComplexMatrix g(n, n);
    std::normal_distribution<double> d;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = Complex(d(gen), d(gen));
    return DensityMatrix::normalized(g * g.adjoint());
}

// w |phi+><phi+| + (1 - w) I/4
inline DensityMatrix werner(double w)
{
    const double h = 0.5;
    ComplexMatrix phi(4, 4);
    phi(0, 0) = phi(0, 3) = phi(3, 0) = phi(3, 3) = h;
    return DensityMatrix(phi * Complex(w) + ComplexMatrix::identity(4) * Complex((1.0 - w) / 4.0));
}

inline double min_eigenvalue(const ComplexMatrix& m)
{
    return herm_eigenvalues(m).back();
}

}  // namespace nqs::test
