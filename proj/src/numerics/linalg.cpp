#include "nqs/numerics/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nqs {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kSqrtNegativeTol = 1e-8;

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m)
{
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

Eigen::Matrix3d to_eigen3(const Real3x3& t)
{
    Eigen::Matrix3d e;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e(i, j) = t[i][j];
    return e;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve(const ComplexMatrix& h, bool vectors)
{
    if (!h.square()) throw std::invalid_argument("herm_eigen: matrix is not square");
    const double err = h.hermiticity_error();
    if (err > kHermitianTol)
        throw std::invalid_argument("herm_eigen: matrix is not Hermitian (error " + std::to_string(err) + ")");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        to_eigen(h), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("herm_eigen: solver did not converge");
    return es;
}

}  // namespace

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b)
{
    ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
        }
    return k;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b)
{
    ComplexVector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep)
{
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t(1), std::multiplies<>());
    if (!m.square() || m.rows() != total)
        throw std::invalid_argument("partial_trace: subsystem dimensions do not match the matrix");
    std::vector<bool> kept(dims.size(), false);
    for (auto k : keep) {
        if (k >= dims.size()) throw std::invalid_argument("partial_trace: keep index out of range");
        kept[k] = true;
    }

    std::size_t kdim = 1;
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (kept[s]) kdim *= dims[s];

    // Split a flat index into (kept part, traced part), both as flat indices
    // in their own reduced spaces.
    const std::size_t ns = dims.size();
    auto split = [&](std::size_t flat, std::size_t& kidx, std::size_t& tidx) {
        std::vector<std::size_t> digit(ns);
        for (std::size_t s = ns; s-- > 0;) {
            digit[s] = flat % dims[s];
            flat /= dims[s];
        }
        kidx = 0;
        tidx = 0;
        for (std::size_t s = 0; s < ns; ++s) {
            if (kept[s]) kidx = kidx * dims[s] + digit[s];
            else tidx = tidx * dims[s] + digit[s];
        }
    };

    std::vector<std::size_t> kpart(total), tpart(total);
    for (std::size_t f = 0; f < total; ++f) split(f, kpart[f], tpart[f]);

    ComplexMatrix out(kdim, kdim);
    for (std::size_t r = 0; r < total; ++r)
        for (std::size_t c = 0; c < total; ++c)
            if (tpart[r] == tpart[c]) out(kpart[r], kpart[c]) += m(r, c);
    return out;
}

void canonicalize_phase(ComplexVector& v)
{
    double best = 0.0;
    for (const auto& z : v) best = std::max(best, std::abs(z));
    if (best == 0.0) return;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) >= best - 1e-9) {
            pick = i;
            break;
        }
    const Complex phase = std::conj(v[pick]) / std::abs(v[pick]);
    for (auto& z : v) z *= phase;
    v[pick] = Complex(v[pick].real(), 0.0);
}

EigenSystem herm_eigen(const ComplexMatrix& h)
{
    const auto es = solve(h, true);
    const std::size_t n = h.rows();
    EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
    // Eigen sorts ascending
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = n - 1 - i;
        out.values[i] = es.eigenvalues()(src);
        ComplexVector v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = es.eigenvectors()(r, src);
        canonicalize_phase(v);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, i) = v[r];
    }
    return out;
}

std::vector<double> herm_eigenvalues(const ComplexMatrix& h)
{
    const auto es = solve(h, false);
    std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + h.rows());
    std::reverse(vals.begin(), vals.end());
    return vals;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m)
{
    const auto es = herm_eigen(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = es.values[k];
        if (lam < -kSqrtNegativeTol)
            throw std::invalid_argument("matrix_sqrt_psd: eigenvalue " + std::to_string(lam) + " is negative");
        const double s = std::sqrt(std::max(lam, 0.0));
        if (s == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += s * es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m)
{
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

double det3(const Real3x3& t)
{
    return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1])
         - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0])
         + t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
}

Real3 eigen_moduli3(const Real3x3& t)
{
    Eigen::EigenSolver<Eigen::Matrix3d> es(to_eigen3(t), false);
    Real3 out{};
    for (int i = 0; i < 3; ++i) out[i] = std::abs(es.eigenvalues()(i));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Real3 singular_values3(const Real3x3& t)
{
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(to_eigen3(t));
    const auto& s = svd.singularValues();
    return {s(0), s(1), s(2)};
}

Real3 symmetric_eigenvalues3(const Real3x3& s)
{
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(to_eigen3(s), Eigen::EigenvaluesOnly);
    const auto& v = es.eigenvalues();
    return {v(2), v(1), v(0)};
}

}  // namespace nqs
