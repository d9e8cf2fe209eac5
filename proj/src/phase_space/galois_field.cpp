#include "nqs/phase_space/galois_field.hpp"

#include <stdexcept>

namespace nqs {

GaloisField build_field(int n)
{
    GaloisField f;
    switch (n) {
    case 2: f.p_ = 2; f.m_ = 1; break;
    case 3: f.p_ = 3; f.m_ = 1; break;
    case 4: f.p_ = 2; f.m_ = 2; break;
    default:
        throw std::invalid_argument("build_field: unsupported order " + std::to_string(n) + " (expected 2, 3 or 4)");
    }
    f.n_ = n;
    f.add_.resize(n * n);
    f.mul_.resize(n * n);
    const int p = f.p_;

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
            f.add_[f.idx(a, b)] = (a0 + b0) % p + p * ((a1 + b1) % p);
            // (a0 + a1 w)(b0 + b1 w) with w^2 = w + 1; degree-1 fields have a1 = b1 = 0
            const int w2 = a1 * b1;
            const int c0 = (a0 * b0 + w2) % p;
            const int c1 = (a0 * b1 + a1 * b0 + w2) % p;
            f.mul_[f.idx(a, b)] = c0 + p * c1;
        }
    return f;
}

int GaloisField::neg(int a) const
{
    for (int b = 0; b < n_; ++b)
        if (add(a, b) == 0) return b;
    throw std::logic_error("GaloisField: no additive inverse");
}

int GaloisField::inv(int a) const
{
    if (a == 0) throw std::invalid_argument("GaloisField: zero has no multiplicative inverse");
    for (int b = 1; b < n_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::logic_error("GaloisField: no multiplicative inverse");
}

int GaloisField::pow(int a, int e) const
{
    int r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::string GaloisField::label(int a) const
{
    if (m_ == 1) return std::to_string(a);
    static const char* gf4[] = {"0", "1", "w", "w+1"};
    return gf4[a];
}

int field_trace(const GaloisField& f, int x)
{
    if (x < 0 || x >= f.order()) throw std::invalid_argument("field_trace: element out of range");
    int t = 0, power = x;
    for (int k = 0; k < f.degree(); ++k) {
        t = f.add(t, power);
        power = f.pow(power, f.characteristic());
    }
    return t;
}

}  // namespace nqs
