#include "nqs/phase_space/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "nqs/csv.hpp"

namespace nqs {

namespace {

// Tr[A B] for square matrices of the same size, without forming A B.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b)
{
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    return t;
}

void require_dim(const DensityMatrix& rho, const QuantumNet& net, const char* who)
{
    if (rho.dim() != std::size_t(net.dim()))
        throw std::invalid_argument(std::string(who) + ": state dimension " + std::to_string(rho.dim()) +
                                    " does not match net '" + net.id() + "' of dimension " +
                                    std::to_string(net.dim()));
}

}  // namespace

PhasePointOperator phase_point_operator(const QuantumNet& net, PhasePoint alpha)
{
    const ComplexMatrix& m = net.point_matrix(alpha);
    return {alpha, m, herm_eigen(m)};
}

std::vector<PhasePointOperator> phase_point_operators(const QuantumNet& net)
{
    std::vector<PhasePointOperator> out;
    const std::size_t n = net.dim();
    for (std::size_t idx = 0; idx < n * n; ++idx) out.push_back(phase_point_operator(net, net.point_at(idx)));
    return out;
}

PhasePointOperator operator_from_choice(const std::vector<Basis>& bases, const std::vector<int>& choice)
{
    if (choice.size() != bases.size()) throw std::invalid_argument("operator_from_choice: one vector per basis");
    const std::size_t n = bases.front().size();
    ComplexMatrix a = ComplexMatrix::identity(n) * Complex(-1.0);
    for (std::size_t b = 0; b < bases.size(); ++b) {
        if (choice[b] < 0 || std::size_t(choice[b]) >= bases[b].size())
            throw std::invalid_argument("operator_from_choice: vector index out of range");
        a += ComplexMatrix::projector(bases[b][choice[b]]);
    }
    return {{0, 0}, a, herm_eigen(a)};
}

DwfGrid::DwfGrid(int n, std::vector<double> values, std::string net_id)
    : n_(n), values_(std::move(values)), net_id_(std::move(net_id))
{
    if (values_.size() != std::size_t(n) * n) throw std::invalid_argument("DwfGrid: need N*N values");
}

double DwfGrid::sum() const
{
    double s = 0.0;
    for (double w : values_) s += w;
    return s;
}

DwfGrid dwf(const DensityMatrix& rho, const QuantumNet& net)
{
    require_dim(rho, net, "dwf");
    const std::size_t n = net.dim();
    std::vector<double> w(n * n);
    for (std::size_t idx = 0; idx < n * n; ++idx)
        w[idx] = trace_product(net.point_matrix(net.point_at(idx)), rho.matrix()).real() / double(n);
    return DwfGrid(int(n), std::move(w), net.id());
}

DensityMatrix reconstruct(const DwfGrid& grid, const QuantumNet& net)
{
    if (grid.dim() != net.dim() || grid.net_id() != net.id())
        throw std::invalid_argument("reconstruct: grid was not produced by net '" + net.id() + "'");
    const std::size_t n = net.dim();
    ComplexMatrix rho(n, n);
    for (std::size_t idx = 0; idx < n * n; ++idx) rho += net.point_matrix(net.point_at(idx)) * Complex(grid.values()[idx]);
    return DensityMatrix(rho);
}

double line_sum(const DwfGrid& grid, const QuantumNet& net, int striation, int line)
{
    double s = 0.0;
    for (const auto& pt : net.striations().at(striation).at(line).points) s += grid.at(pt);
    return s;
}

double wigner_negativity(const DensityMatrix& rho, const QuantumNet& net)
{
    require_dim(rho, net, "wigner_negativity");
    const std::size_t n = net.dim();
    double lowest = 0.0;
    for (std::size_t idx = 0; idx < n * n; ++idx)
        lowest = std::min(lowest, trace_product(net.point_matrix(net.point_at(idx)), rho.matrix()).real());
    return -lowest;
}

double depolarizing_robustness(const DensityMatrix& rho, const QuantumNet& net)
{
    const int n = net.dim();
    if (n != 2 && n != 3)
        throw std::invalid_argument("depolarizing_robustness: defined for prime dimensions 2 and 3 only");
    const double neg = wigner_negativity(rho, net);
    return 1.0 - 1.0 / (double(n) * n * neg + 1.0);
}

double mana(const DensityMatrix& rho, const QuantumNet& net)
{
    const DwfGrid g = dwf(rho, net);
    double negative = 0.0;
    // entries within rounding of zero are zero, so stabilizer states give exactly 0
    for (double w : g.values())
        if (w < -1e-12) negative -= w;
    return std::log(2.0 * negative + 1.0);
}

std::string dwf_csv(const DwfGrid& grid)
{
    CsvWriter csv({"q", "p", "w"});
    for (int q = 0; q < grid.dim(); ++q)
        for (int p = 0; p < grid.dim(); ++p)
            csv.row({std::to_string(q + 1), std::to_string(p + 1), format_real(grid.at({q, p}))});
    return csv.str();
}

}  // namespace nqs
