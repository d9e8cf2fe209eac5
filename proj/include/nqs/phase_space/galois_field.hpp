#pragma once

#include <string>
#include <vector>

namespace nqs {

// Elements are ints 0..N-1. For N = p^2 the element c0 + c1*w is stored as
// c0 + p*c1, so GF(4) reads 0, 1, w, w+1 in index order.
class GaloisField {
public:
    int order() const { return n_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const;
    int inv(int a) const;
    int pow(int a, int e) const;

    std::string label(int a) const;

    friend GaloisField build_field(int n);

private:
    int idx(int a, int b) const { return a * n_ + b; }
    int n_ = 0, p_ = 0, m_ = 0;
    std::vector<int> add_, mul_;
};

// N in {2, 3, 4}; GF(4) uses the irreducible polynomial x^2 + x + 1.
GaloisField build_field(int n);

// Tr(x) = x + x^p + ... + x^(p^(m-1)), an element of the prime subfield.
int field_trace(const GaloisField& f, int x);

}  // namespace nqs
