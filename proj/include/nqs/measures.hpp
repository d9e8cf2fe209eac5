#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nqs/numerics/density.hpp"
#include "nqs/numerics/linalg.hpp"
#include "nqs/phase_space/wigner.hpp"

namespace nqs {

// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

// Sum of |rho_ij| over i != j.
double coherence_l1(const DensityMatrix& rho);

// -Tr[m ln m] over the eigenvalues of a Hermitian matrix, 0 ln 0 = 0.
double von_neumann_entropy(const ComplexMatrix& m);

struct MeasurementAngles {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2 pi)
};

// Maps arbitrary real angles onto the same measurement with theta in
// [0, pi] and phi in [0, 2 pi).
MeasurementAngles canonical_angles(double theta, double phi);

// sum_i p_i S(rho_A|i) for the projective measurement on qubit B with
// |l> = cos(t/2)|0> + e^{i phi} sin(t/2)|1>, |m> = sin(t/2)|0> - e^{i phi} cos(t/2)|1>.
double conditional_entropy(const DensityMatrix& rho, const MeasurementAngles& angles);

struct DiscordOptions {
    int grid_n = 64;          // coarse grid is grid_n x grid_n
    double refine_tol = 1e-8;  // objective tolerance for the local refinement
    bool refine = true;
};

struct DiscordResult {
    double value;          // discord in nats
    double coarse_minimum;  // min conditional entropy on the grid
    double minimum;         // after refinement, never above coarse_minimum
    MeasurementAngles angles;
};

DiscordResult discord_detail(const DensityMatrix& rho, const DiscordOptions& options = {});
double discord(const DensityMatrix& rho, const DiscordOptions& options = {});

// Tr[rho (sigma_i x sigma_j)]
Real3x3 correlation_matrix(const DensityMatrix& rho);

// n in {2, 3}
double steering(const DensityMatrix& rho, int n);

// Defined for det T < 0 only; otherwise OutOfDomain carrying det T.
double maximal_fidelity(const DensityMatrix& rho);
double fidelity_deviation(const DensityMatrix& rho);

// (1 + Tr sqrt(T^dagger T) / 3) / 2
double teleportation_fidelity(const DensityMatrix& rho);

// 2 sqrt(u1 + u2), u1, u2 the two largest eigenvalues of T^T T.
double chsh_smax(const DensityMatrix& rho);

struct UqtVerdict {
    double det_T;
    Real3 eigen_abs;  // |e_i| descending
    bool useful_qt;   // det T < 0 and maximal fidelity > 2/3
    bool universal;   // det T < 0, |e_i| equal within tol, all > 1/3
};

UqtVerdict uqt_check(const DensityMatrix& rho, double tol = 1e-3);

// Points whose operator enters t_ij with coefficient -1, so that
// t_ij = 1 - 2 sum_{a in set} W_a. Throws if the net has coefficients other
// than +-1.
using CorrelationSignSets = std::array<std::array<std::vector<PhasePoint>, 3>, 3>;
CorrelationSignSets correlation_sign_sets(const QuantumNet& net);

Real3x3 correlation_matrix_from_dwf(const DwfGrid& grid, const QuantumNet& net);

struct CorrelationReport {
    double concurrence;
    double coherence_l1;
    double discord;
    double steering_2;
    double steering_3;
    std::optional<double> max_fidelity;
    std::optional<double> fidelity_deviation;
    double tele_fidelity;
    double s_max;
    double p_succ;
};

CorrelationReport report(const DensityMatrix& rho, double p_succ, const DiscordOptions& options = {});

// Column order of the report CSV; absent values are empty fields.
std::vector<std::string> report_columns();
std::vector<std::string> report_fields(const CorrelationReport& r);

}  // namespace nqs
