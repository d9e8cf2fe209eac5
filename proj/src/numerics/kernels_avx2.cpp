#include "nqs/numerics/kernels.hpp"

#ifdef NQS_HAVE_AVX2_TU

#include <immintrin.h>

namespace nqs::kernels {

// std::complex<double> is layout-compatible with double[2], so a __m256d
// holds two consecutive complex entries (re0, im0, re1, im1).
void matmul_avx2(const Complex* a, const Complex* b, Complex* c,
                 std::size_t m, std::size_t k, std::size_t n)
{
    const double* bd = reinterpret_cast<const double*>(b);
    double* cd = reinterpret_cast<double*>(c);
    const std::size_t n2 = n & ~std::size_t(1);

    for (std::size_t i = 0; i < m; ++i) {
        double* crow = cd + 2 * i * n;
        for (std::size_t j = 0; j < n2; j += 2)
            _mm256_storeu_pd(crow + 2 * j, _mm256_setzero_pd());
        if (n2 != n) {
            crow[2 * n2] = 0.0;
            crow[2 * n2 + 1] = 0.0;
        }

        for (std::size_t p = 0; p < k; ++p) {
            const Complex aip = a[i * k + p];
            const __m256d are = _mm256_set1_pd(aip.real());
            const __m256d aim = _mm256_set1_pd(aip.imag());
            const double* brow = bd + 2 * p * n;
            for (std::size_t j = 0; j < n2; j += 2) {
                const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                const __m256d bswap = _mm256_permute_pd(bv, 0b0101);
                // even lanes: are*bre - aim*bim, odd lanes: are*bim + aim*bre
                const __m256d prod = _mm256_fmaddsub_pd(are, bv, _mm256_mul_pd(aim, bswap));
                const __m256d acc = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(acc, prod));
            }
            if (n2 != n) {
                const double bre = brow[2 * n2], bim = brow[2 * n2 + 1];
                crow[2 * n2] += aip.real() * bre - aip.imag() * bim;
                crow[2 * n2 + 1] += aip.real() * bim + aip.imag() * bre;
            }
        }
    }
}

}  // namespace nqs::kernels

#endif
