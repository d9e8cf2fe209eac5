#pragma once

#include <string>
#include <vector>

#include "nqs/numerics/density.hpp"
#include "nqs/numerics/linalg.hpp"
#include "nqs/phase_space/quantum_net.hpp"

namespace nqs {

struct PhasePointOperator {
    PhasePoint alpha;
    ComplexMatrix matrix;
    EigenSystem eigen;  // values descending
};

PhasePointOperator phase_point_operator(const QuantumNet& net, PhasePoint alpha);
// All N^2 operators, ordered by point index (q major).
std::vector<PhasePointOperator> phase_point_operators(const QuantumNet& net);

// sum_b |bases[b][choice[b]]><.| - I: the operator at a point whose lines
// carry the chosen vectors. Useful for surveying all nets at once.
PhasePointOperator operator_from_choice(const std::vector<Basis>& bases, const std::vector<int>& choice);

class DwfGrid {
public:
    DwfGrid(int n, std::vector<double> values, std::string net_id);

    int dim() const { return n_; }
    const std::vector<double>& values() const { return values_; }
    const std::string& net_id() const { return net_id_; }
    double at(PhasePoint a) const { return values_[std::size_t(a.q) * n_ + a.p]; }
    double sum() const;

private:
    int n_;
    std::vector<double> values_;  // q major
    std::string net_id_;
};

// W_a = Tr[A_a rho] / N
DwfGrid dwf(const DensityMatrix& rho, const QuantumNet& net);
// rho = sum_a W_a A_a
DensityMatrix reconstruct(const DwfGrid& grid, const QuantumNet& net);

// Sum of W over a line of the net.
double line_sum(const DwfGrid& grid, const QuantumNet& net, int striation, int line);

// |min_a Tr[A_a rho]| when negative, else 0. No 1/N factor.
double wigner_negativity(const DensityMatrix& rho, const QuantumNet& net);
// a* = 1 - 1/(N^2 |N_G| + 1); prime N only.
double depolarizing_robustness(const DensityMatrix& rho, const QuantumNet& net);
// ln sum_a |W_a|, evaluated as ln(1 + 2 * sum of |negative W|) so states
// with a non-negative DWF give exactly zero.
double mana(const DensityMatrix& rho, const QuantumNet& net);

// Header q,p,w; grid indices start at 1.
std::string dwf_csv(const DwfGrid& grid);

}  // namespace nqs
