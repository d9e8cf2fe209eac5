#include "nqs/phase_space/geometry.hpp"

#include <stdexcept>

namespace nqs {

Direction striation_direction(const GaloisField& f, int s)
{
    if (s < 0 || s > f.order()) throw std::invalid_argument("striation_direction: index out of range");
    if (s == 0) return {1, 0};
    if (s == 1) return {0, 1};
    return {1, s - 1};
}

std::vector<Striation> build_striations(const GaloisField& f)
{
    const int n = f.order();
    std::vector<Striation> out;
    for (int s = 0; s <= n; ++s) {
        const Direction d = striation_direction(f, s);
        Striation st(n);
        for (int c = 0; c < n; ++c) {
            st[c].striation = s;
            st[c].index = c;
        }
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p) {
                const int c = f.add(f.mul(d.a, q), f.mul(d.b, p));
                st[c].points.push_back({q, p});
            }
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace nqs
