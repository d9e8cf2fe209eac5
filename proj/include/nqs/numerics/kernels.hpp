#pragma once

#include <cstddef>
#include <string_view>

#include "nqs/numerics/matrix.hpp"

namespace nqs::kernels {

// c[m x n] = a[m x k] * b[k x n], all row-major, c fully overwritten.
using MatmulFn = void (*)(const Complex* a, const Complex* b, Complex* c,
                          std::size_t m, std::size_t k, std::size_t n);

void matmul_scalar(const Complex* a, const Complex* b, Complex* c,
                   std::size_t m, std::size_t k, std::size_t n);

// Only callable when avx2_supported() is true.
void matmul_avx2(const Complex* a, const Complex* b, Complex* c,
                 std::size_t m, std::size_t k, std::size_t n);

enum class Backend { Scalar, Avx2 };

bool avx2_compiled();
bool avx2_supported();

// Chosen once from CPUID on first use. NQS_KERNELS=scalar in the environment
// pins the reference path.
Backend active_backend();
std::string_view backend_name(Backend b);

void matmul(const Complex* a, const Complex* b, Complex* c,
            std::size_t m, std::size_t k, std::size_t n);

}  // namespace nqs::kernels
