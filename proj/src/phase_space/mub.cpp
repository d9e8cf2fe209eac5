#include "nqs/phase_space/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nqs {

namespace {

Basis normalized(std::vector<ComplexVector> raw)
{
    for (auto& v : raw) {
        const double n = norm(v);
        for (auto& z : v) z /= n;
    }
    return raw;
}

}  // namespace

std::vector<Basis> mub_tables(int n)
{
    const Complex i(0.0, 1.0);
    switch (n) {
    case 2:
        return {
            normalized({{0, 1}, {1, 0}}),
            normalized({{1, 1}, {1, -1}}),
            normalized({{1, i}, {1, -i}}),
        };
    case 3: {
        // cube root of unity, not the GF(3) element 2
        const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
        const Complex w2 = w * w;
        return {
            normalized({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
            normalized({{1, 1, 1}, {1, w, w2}, {1, w2, w}}),
            normalized({{1, w2, w2}, {1, 1, w}, {1, w, 1}}),
            normalized({{1, w, w}, {1, w2, 1}, {1, 1, w2}}),
        };
    }
    case 4:
        return {
            normalized({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
            normalized({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}),
            normalized({{1, -i, i, 1}, {1, i, i, -1}, {1, -i, -i, -1}, {1, i, -i, 1}}),
            normalized({{1, 1, i, -i}, {1, -1, i, i}, {1, 1, -i, i}, {1, -1, -i, -i}}),
            // third vector is printed with -i in the third slot, which is not
            // orthogonal to the first; -1 is the only entry that restores a basis
            normalized({{1, -i, 1, i}, {1, i, 1, -i}, {1, -i, -1, -i}, {1, i, -1, i}}),
        };
    default:
        throw std::invalid_argument("mub_tables: unsupported dimension " + std::to_string(n));
    }
}

double mub_defect(const std::vector<Basis>& bases)
{
    double worst = 0.0;
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = a; b < bases.size(); ++b)
            for (std::size_t u = 0; u < bases[a].size(); ++u)
                for (std::size_t v = 0; v < bases[b].size(); ++v) {
                    const double n = double(bases[a][u].size());
                    const double expect = a == b ? (u == v ? 1.0 : 0.0) : 1.0 / n;
                    worst = std::max(worst, std::abs(std::norm(inner(bases[a][u], bases[b][v])) - expect));
                }
    return worst;
}

}  // namespace nqs
