#pragma once

#include <vector>

#include "nqs/channels.hpp"
#include "nqs/numerics/density.hpp"

namespace nqs {

struct FilterStrengths {
    double p = 0.0;  // weak measurement
    double q = 0.0;  // measurement reversal
    FilterStrengths() = default;
    FilterStrengths(double p_, double q_);  // both must lie in [0,1)
};

struct ProtectedOutcome {
    DensityMatrix state;
    double success_probability;
};

// diag(1, sqrt(1-p)) on each qubit
ComplexMatrix wm_operator(double p);
// diag(sqrt(1-q), 1) on each qubit
ComplexMatrix qmr_operator(double q);

// Weak measurement, then the channel on both qubits, then reversal, then
// normalization. Throws NumericalError when the success probability falls
// below 1e-12.
ProtectedOutcome protect_evolve(const DensityMatrix& rho0, const ChannelSpec& channel, double t,
                                const FilterStrengths& strengths);

enum class Objective { Concurrence, MaxFidelity };

struct OptimizeOptions {
    double step = 0.01;  // in (0, 0.1]
    Objective objective = Objective::Concurrence;
    ChannelSpec channel = Identity{};
    double t = 0.0;
    // objective values closer than this count as equal
    double tie_tolerance = 1e-9;
};

struct OptimumResult {
    FilterStrengths strengths;
    double objective;
    double success_probability;
};

// Exhaustive search over p, q in {0, step, ..., < 1}. Ties go to the larger
// success probability, then the smaller p, then the smaller q. Cells where
// the objective is undefined (maximal fidelity with det T >= 0) are skipped.
OptimumResult optimize_pq(const DensityMatrix& rho0, const OptimizeOptions& options = {});

// {0, step, 2 step, ...} strictly below 1.
std::vector<double> filter_grid(double step);

struct SuccessSurface {
    std::vector<double> axis;    // shared by p and q
    std::vector<double> values;  // p major
    double at(std::size_t ip, std::size_t iq) const { return values[ip * axis.size() + iq]; }
};

// step in (0, 0.5].
SuccessSurface success_surface(const DensityMatrix& rho0, const ChannelSpec& channel, double t, double step);

}  // namespace nqs
