#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace nqs {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Dense row-major complex matrix. Sizes in this project never exceed 16x16,
// so storage is a flat vector and every operation is a plain value copy.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(const std::vector<Complex>& d);
    static ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);
    static ComplexMatrix projector(const ComplexVector& v) { return outer(v, v); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const Complex* data() const { return data_.data(); }
    Complex* data() { return data_.data(); }
    const std::vector<Complex>& entries() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    ComplexVector column(std::size_t c) const;
    ComplexVector apply(const ComplexVector& v) const;

    bool all_finite() const;
    // max_ij |m_ij - m_ji^*|
    double hermiticity_error() const;
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// K X K^dagger
ComplexMatrix sandwich(const ComplexMatrix& k, const ComplexMatrix& x);

Complex inner(const ComplexVector& a, const ComplexVector& b);  // <a|b>
double norm(const ComplexVector& v);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
}  // namespace pauli

}  // namespace nqs
