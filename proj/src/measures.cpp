#include "nqs/measures.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nqs/csv.hpp"
#include "nqs/errors.hpp"
#include "nqs/parallel.hpp"
#include "nqs/states.hpp"

namespace nqs {

namespace {

void require_two_qubit(const DensityMatrix& rho, const char* who)
{
    if (rho.dim() != 4) throw std::invalid_argument(std::string(who) + ": expected a two-qubit state");
}

// 0 ln 0 := 0; eigenvalues at rounding level below zero are dropped too
double entropy_of(const std::vector<double>& eig)
{
    double s = 0.0;
    for (double l : eig)
        if (l > 0.0) s -= l * std::log(l);
    return s;
}

}  // namespace

double concurrence(const DensityMatrix& rho)
{
    require_two_qubit(rho, "concurrence");
    // With rho = W W^dagger, the square roots of the eigenvalues of
    // sqrt(rho) rho~ sqrt(rho) are the singular values of W^T (Y x Y) W. The
    // SVD route keeps full precision for rank-deficient states where taking
    // square roots of tiny eigenvalues would not.
    const EigenSystem es = herm_eigen(rho.matrix());
    ComplexMatrix w(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        const double s = std::sqrt(std::max(es.values[k], 0.0));
        for (std::size_t i = 0; i < 4; ++i) w(i, k) = s * es.vectors(i, k);
    }
    const ComplexMatrix yy = tensor(pauli::Y(), pauli::Y());
    const std::vector<double> lam = singular_values(w.transpose() * yy * w);
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double coherence_l1(const DensityMatrix& rho)
{
    double s = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t j = 0; j < rho.dim(); ++j)
            if (i != j) s += std::abs(rho(i, j));
    return s;
}

double von_neumann_entropy(const ComplexMatrix& m)
{
    return entropy_of(herm_eigenvalues(m));
}

MeasurementAngles canonical_angles(double theta, double phi)
{
    const double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    // theta -> 2 pi - theta is the same basis with phi shifted by pi
    if (theta > std::numbers::pi) {
        theta = two_pi - theta;
        phi += std::numbers::pi;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    return {theta, phi};
}

namespace {

// Binary entropy of a 2x2 unnormalized block, scaled back by its weight:
// returns p * S(block / p).
double weighted_qubit_entropy(Complex a, Complex b, Complex d)
{
    const double p = a.real() + d.real();
    if (p <= 0.0) return 0.0;
    const double diff = (a.real() - d.real()) / p;
    const double off = std::abs(b) / p;
    const double r = std::min(1.0, std::sqrt(diff * diff + 4.0 * off * off));
    return p * entropy_of({(1.0 + r) / 2.0, (1.0 - r) / 2.0});
}

double conditional_entropy_raw(const ComplexMatrix& m, double theta, double phi)
{
    const Complex e = std::polar(1.0, phi);
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const std::array<std::array<Complex, 2>, 2> vecs{{{c, e * s}, {s, -e * c}}};

    double total = 0.0;
    for (const auto& v : vecs) {
        // block(a, a') = sum_{b, b'} conj(v_b) rho_{(a b), (a' b')} v_{b'}
        Complex blk[2][2] = {};
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap)
                for (int b = 0; b < 2; ++b)
                    for (int bp = 0; bp < 2; ++bp)
                        blk[a][ap] += std::conj(v[b]) * m(2 * a + b, 2 * ap + bp) * v[bp];
        total += weighted_qubit_entropy(blk[0][0], blk[0][1], blk[1][1]);
    }
    return total;
}

struct RefineContext {
    const ComplexMatrix* rho;
};

double gsl_objective(const gsl_vector* x, void* params)
{
    const auto* ctx = static_cast<const RefineContext*>(params);
    return conditional_entropy_raw(*ctx->rho, gsl_vector_get(x, 0), gsl_vector_get(x, 1));
}

// Nelder-Mead from the best grid cell. Near a smooth minimum the objective
// error scales with the square of the simplex size, so the size target is
// sqrt(refine_tol).
std::pair<double, MeasurementAngles> refine(const ComplexMatrix& rho, MeasurementAngles start, double step_theta,
                                            double step_phi, double refine_tol)
{
    RefineContext ctx{&rho};
    gsl_multimin_function fn{&gsl_objective, 2, &ctx};

    gsl_vector* x = gsl_vector_alloc(2);
    gsl_vector* steps = gsl_vector_alloc(2);
    gsl_vector_set(x, 0, start.theta);
    gsl_vector_set(x, 1, start.phi);
    gsl_vector_set(steps, 0, step_theta);
    gsl_vector_set(steps, 1, step_phi);

    gsl_multimin_fminimizer* mz = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
    gsl_multimin_fminimizer_set(mz, &fn, x, steps);

    const double size_tol = std::sqrt(refine_tol);
    for (int iter = 0; iter < 1000; ++iter) {
        if (gsl_multimin_fminimizer_iterate(mz) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(mz), size_tol) == GSL_SUCCESS) break;
    }
    const double best = gsl_multimin_fminimizer_minimum(mz);
    const gsl_vector* bx = gsl_multimin_fminimizer_x(mz);
    const MeasurementAngles angles = canonical_angles(gsl_vector_get(bx, 0), gsl_vector_get(bx, 1));

    gsl_multimin_fminimizer_free(mz);
    gsl_vector_free(steps);
    gsl_vector_free(x);
    return {best, angles};
}

}  // namespace

double conditional_entropy(const DensityMatrix& rho, const MeasurementAngles& angles)
{
    require_two_qubit(rho, "conditional_entropy");
    return conditional_entropy_raw(rho.matrix(), angles.theta, angles.phi);
}

DiscordResult discord_detail(const DensityMatrix& rho, const DiscordOptions& options)
{
    require_two_qubit(rho, "discord");
    if (options.grid_n < 2) throw std::invalid_argument("discord: grid_n must be at least 2");

    const std::size_t n = std::size_t(options.grid_n);
    const double dtheta = std::numbers::pi / double(n - 1);
    const double dphi = 2.0 * std::numbers::pi / double(n - 1);

    std::vector<double> row_min(n);
    std::vector<std::size_t> row_arg(n);
    parallel_for(n, [&](std::size_t i) {
        double best = INFINITY;
        std::size_t arg = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = conditional_entropy_raw(rho.matrix(), double(i) * dtheta, double(j) * dphi);
            if (v < best) {
                best = v;
                arg = j;
            }
        }
        row_min[i] = best;
        row_arg[i] = arg;
    });
    std::size_t bi = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (row_min[i] < row_min[bi]) bi = i;

    DiscordResult r;
    r.coarse_minimum = row_min[bi];
    r.minimum = r.coarse_minimum;
    r.angles = {double(bi) * dtheta, double(row_arg[bi]) * dphi};
    if (options.refine) {
        const auto [value, angles] = refine(rho.matrix(), r.angles, dtheta, dphi, options.refine_tol);
        if (value < r.minimum) {
            r.minimum = value;
            r.angles = angles;
        }
    }

    const double s_b = von_neumann_entropy(partial_trace(rho.matrix(), {2, 2}, {1}));
    const double s_ab = von_neumann_entropy(rho.matrix());
    const double d = s_b - s_ab + r.minimum;
    // rounding can dip a hair below zero for classical states; anything
    // larger is left visible
    r.value = d > -1e-9 ? std::max(0.0, d) : d;
    return r;
}

double discord(const DensityMatrix& rho, const DiscordOptions& options)
{
    return discord_detail(rho, options).value;
}

Real3x3 correlation_matrix(const DensityMatrix& rho)
{
    require_two_qubit(rho, "correlation_matrix");
    return decompose_two_qubit(rho).T;
}

double steering(const DensityMatrix& rho, int n)
{
    if (n != 2 && n != 3) throw std::invalid_argument("steering: n must be 2 or 3");
    require_two_qubit(rho, "steering");
    const Real3 c = eigen_moduli3(correlation_matrix(rho));
    const double c2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
    const double omega = n == 3 ? std::sqrt(c2) : std::sqrt(std::max(0.0, c2 - c[2] * c[2]));
    const double s = (omega - 1.0) / (std::sqrt(double(n)) - 1.0);
    return std::clamp(s, 0.0, 1.0);
}

namespace {

Real3 eigen_abs_in_domain(const DensityMatrix& rho, const char* who)
{
    require_two_qubit(rho, who);
    const Real3x3 t = correlation_matrix(rho);
    const double det = det3(t);
    if (!(det < 0.0)) throw OutOfDomain(std::string(who) + ": requires det T < 0, got " + std::to_string(det), det);
    return eigen_moduli3(t);
}

}  // namespace

double maximal_fidelity(const DensityMatrix& rho)
{
    const Real3 e = eigen_abs_in_domain(rho, "maximal_fidelity");
    return 0.5 * (1.0 + (e[0] + e[1] + e[2]) / 3.0);
}

double fidelity_deviation(const DensityMatrix& rho)
{
    const Real3 e = eigen_abs_in_domain(rho, "fidelity_deviation");
    const double s = (e[0] - e[1]) * (e[0] - e[1]) + (e[0] - e[2]) * (e[0] - e[2]) + (e[1] - e[2]) * (e[1] - e[2]);
    return std::sqrt(s) / (3.0 * std::sqrt(10.0));
}

double teleportation_fidelity(const DensityMatrix& rho)
{
    require_two_qubit(rho, "teleportation_fidelity");
    const Real3 sv = singular_values3(correlation_matrix(rho));
    return 0.5 * (1.0 + (sv[0] + sv[1] + sv[2]) / 3.0);
}

double chsh_smax(const DensityMatrix& rho)
{
    require_two_qubit(rho, "chsh_smax");
    const Real3x3 t = correlation_matrix(rho);
    Real3x3 tt{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) tt[i][j] += t[k][i] * t[k][j];
    const Real3 u = symmetric_eigenvalues3(tt);
    return 2.0 * std::sqrt(std::max(0.0, u[0] + u[1]));
}

UqtVerdict uqt_check(const DensityMatrix& rho, double tol)
{
    require_two_qubit(rho, "uqt_check");
    const Real3x3 t = correlation_matrix(rho);
    UqtVerdict v;
    v.det_T = det3(t);
    v.eigen_abs = eigen_moduli3(t);
    const bool in_domain = v.det_T < 0.0;
    const double f = 0.5 * (1.0 + (v.eigen_abs[0] + v.eigen_abs[1] + v.eigen_abs[2]) / 3.0);
    v.useful_qt = in_domain && f > 2.0 / 3.0;
    v.universal = in_domain && v.eigen_abs[0] - v.eigen_abs[2] <= tol && v.eigen_abs[2] > 1.0 / 3.0;
    return v;
}

CorrelationSignSets correlation_sign_sets(const QuantumNet& net)
{
    if (net.dim() != 4) throw std::invalid_argument("correlation_sign_sets: needs a two-qubit net");
    const std::array<ComplexMatrix, 3> s{pauli::X(), pauli::Y(), pauli::Z()};
    CorrelationSignSets sets;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const ComplexMatrix ss = tensor(s[i], s[j]);
            for (std::size_t idx = 0; idx < 16; ++idx) {
                const PhasePoint a = net.point_at(idx);
                const double c = (net.point_matrix(a) * ss).trace().real();
                if (std::abs(std::abs(c) - 1.0) > 1e-10)
                    throw std::invalid_argument("correlation_sign_sets: net '" + net.id() +
                                                "' has a coefficient other than +-1");
                if (c < 0.0) sets[i][j].push_back(a);
            }
        }
    return sets;
}

Real3x3 correlation_matrix_from_dwf(const DwfGrid& grid, const QuantumNet& net)
{
    if (grid.net_id() != net.id()) throw std::invalid_argument("correlation_matrix_from_dwf: grid and net differ");
    const CorrelationSignSets sets = correlation_sign_sets(net);
    Real3x3 t{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double neg = 0.0;
            for (const auto& a : sets[i][j]) neg += grid.at(a);
            t[i][j] = 1.0 - 2.0 * neg;
        }
    return t;
}

CorrelationReport report(const DensityMatrix& rho, double p_succ, const DiscordOptions& options)
{
    require_two_qubit(rho, "report");
    CorrelationReport r{};
    r.concurrence = concurrence(rho);
    r.coherence_l1 = coherence_l1(rho);
    r.discord = discord(rho, options);
    r.steering_2 = steering(rho, 2);
    r.steering_3 = steering(rho, 3);
    try {
        r.max_fidelity = maximal_fidelity(rho);
        r.fidelity_deviation = fidelity_deviation(rho);
    } catch (const OutOfDomain&) {
        r.max_fidelity.reset();
        r.fidelity_deviation.reset();
    }
    r.tele_fidelity = teleportation_fidelity(rho);
    r.s_max = chsh_smax(rho);
    r.p_succ = p_succ;
    return r;
}

std::vector<std::string> report_columns()
{
    return {"concurrence", "coherence_l1", "discord", "steering_2", "steering_3",
            "max_fidelity", "fidelity_deviation", "tele_fidelity", "s_max", "p_succ"};
}

std::vector<std::string> report_fields(const CorrelationReport& r)
{
    return {format_real(r.concurrence), format_real(r.coherence_l1), format_real(r.discord),
            format_real(r.steering_2), format_real(r.steering_3), format_optional(r.max_fidelity),
            format_optional(r.fidelity_deviation), format_real(r.tele_fidelity), format_real(r.s_max),
            format_real(r.p_succ)};
}

}  // namespace nqs
