#include "nqs/protection.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "nqs/errors.hpp"
#include "nqs/measures.hpp"
#include "nqs/numerics/linalg.hpp"
#include "nqs/parallel.hpp"

namespace nqs {

namespace {

void require_strength(double x, const char* name)
{
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0,1)");
}

constexpr double kMinSuccess = 1e-12;

}  // namespace

FilterStrengths::FilterStrengths(double p_, double q_) : p(p_), q(q_)
{
    require_strength(p, "weak measurement strength p");
    require_strength(q, "reversal strength q");
}

ComplexMatrix wm_operator(double p)
{
    require_strength(p, "weak measurement strength p");
    const ComplexMatrix one = ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - p)});
    return tensor(one, one);
}

ComplexMatrix qmr_operator(double q)
{
    require_strength(q, "reversal strength q");
    const ComplexMatrix one = ComplexMatrix::diagonal({std::sqrt(1.0 - q), 1.0});
    return tensor(one, one);
}

ProtectedOutcome protect_evolve(const DensityMatrix& rho0, const ChannelSpec& channel, double t,
                                const FilterStrengths& strengths)
{
    if (rho0.dim() != 4) throw std::invalid_argument("protect_evolve: expected a two-qubit state");
    const ComplexMatrix wm = wm_operator(strengths.p);
    const ComplexMatrix qmr = qmr_operator(strengths.q);
    const KrausSet ks = kraus_set(channel, t, 2);

    const ComplexMatrix filtered = sandwich(wm, rho0.matrix());
    ComplexMatrix evolved(4, 4);
    for (const auto& ki : ks.operators())
        for (const auto& kj : ks.operators()) evolved += sandwich(tensor(ki, kj), filtered);
    const ComplexMatrix out = sandwich(qmr, evolved);

    const double success = out.trace().real();
    if (!(success >= kMinSuccess))
        throw NumericalError("protect_evolve: success probability " + std::to_string(success) + " below 1e-12");
    return {DensityMatrix(out * Complex(1.0 / success)), success};
}

std::vector<double> filter_grid(double step)
{
    if (!(step > 0.0)) throw std::invalid_argument("filter grid step must be positive");
    std::vector<double> g;
    // k * step rather than a running sum, so 0.17 is the same double as the literal
    for (int k = 0;; ++k) {
        const double v = k * step;
        if (v >= 1.0 - 1e-12) break;
        g.push_back(v);
    }
    return g;
}

OptimumResult optimize_pq(const DensityMatrix& rho0, const OptimizeOptions& options)
{
    if (!(options.step > 0.0 && options.step <= 0.1)) throw std::invalid_argument("optimize_pq: step must lie in (0, 0.1]");
    const std::vector<double> axis = filter_grid(options.step);
    const std::size_t n = axis.size();

    struct Cell {
        double objective;
        double success;
    };
    std::vector<std::optional<Cell>> cells(n * n);
    parallel_for(n * n, [&](std::size_t idx) {
        const FilterStrengths fs(axis[idx / n], axis[idx % n]);
        try {
            const auto out = protect_evolve(rho0, options.channel, options.t, fs);
            const double value = options.objective == Objective::Concurrence ? concurrence(out.state)
                                                                             : maximal_fidelity(out.state);
            cells[idx] = Cell{value, out.success_probability};
        } catch (const OutOfDomain&) {
        } catch (const NumericalError&) {
        }
    });

    // cells are visited in (p, q) order, so on a full tie the earlier one,
    // i.e. smaller p then smaller q, is kept
    std::optional<std::size_t> best;
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        if (!cells[idx]) continue;
        if (!best) {
            best = idx;
            continue;
        }
        const Cell& c = *cells[idx];
        const Cell& b = *cells[*best];
        if (c.objective > b.objective + options.tie_tolerance ||
            (std::abs(c.objective - b.objective) <= options.tie_tolerance && c.success > b.success + 1e-12))
            best = idx;
    }
    if (!best) throw OutOfDomain("optimize_pq: objective undefined on every grid cell", 0.0);
    return {FilterStrengths(axis[*best / n], axis[*best % n]), cells[*best]->objective, cells[*best]->success};
}

SuccessSurface success_surface(const DensityMatrix& rho0, const ChannelSpec& channel, double t, double step)
{
    if (!(step > 0.0 && step <= 0.5)) throw std::invalid_argument("success_surface: step must lie in (0, 0.5]");
    SuccessSurface s;
    s.axis = filter_grid(step);
    const std::size_t n = s.axis.size();
    s.values.assign(n * n, 0.0);
    parallel_for(n * n, [&](std::size_t idx) {
        const FilterStrengths fs(s.axis[idx / n], s.axis[idx % n]);
        s.values[idx] = protect_evolve(rho0, channel, t, fs).success_probability;
    });
    return s;
}

}  // namespace nqs
