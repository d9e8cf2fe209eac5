#include "nqs/numerics/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace nqs::kernels {

void matmul_scalar(const Complex* a, const Complex* b, Complex* c,
                   std::size_t m, std::size_t k, std::size_t n)
{
    for (std::size_t i = 0; i < m * n; ++i) c[i] = Complex(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        Complex* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const Complex aip = a[i * k + p];
            const Complex* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                // spelled out to skip the NaN-recovery path of complex operator*
                const double re = aip.real() * brow[j].real() - aip.imag() * brow[j].imag();
                const double im = aip.real() * brow[j].imag() + aip.imag() * brow[j].real();
                crow[j] += Complex(re, im);
            }
        }
    }
}

#ifndef NQS_HAVE_AVX2_TU
void matmul_avx2(const Complex*, const Complex*, Complex*, std::size_t, std::size_t, std::size_t)
{
    throw std::logic_error("AVX2 kernels were not compiled into this build");
}
#endif

bool avx2_compiled()
{
#ifdef NQS_HAVE_AVX2_TU
    return true;
#else
    return false;
#endif
}

bool avx2_supported()
{
#if defined(NQS_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Backend select_backend()
{
    const char* env = std::getenv("NQS_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

MatmulFn resolve(Backend b)
{
    return b == Backend::Avx2 ? &matmul_avx2 : &matmul_scalar;
}

}  // namespace

Backend active_backend()
{
    static const Backend chosen = select_backend();
    return chosen;
}

std::string_view backend_name(Backend b)
{
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

void matmul(const Complex* a, const Complex* b, Complex* c,
            std::size_t m, std::size_t k, std::size_t n)
{
    static const MatmulFn fn = resolve(active_backend());
    fn(a, b, c, m, k, n);
}

}  // namespace nqs::kernels
