// AVX2/FMA variant of the bidiagonal row step. Unaligned loads throughout;
// the scalar tail finishes whatever is left of the 4-lane blocks.
#include "purebirth/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace purebirth::kernels {

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void row_step_avx2(const double* p, const double* q, const double* prev, double* next, std::size_t len) {
    std::size_t k = 1;
    for (; k + 4 <= len; k += 4) {
        __m256d vp = _mm256_loadu_pd(p + k);
        __m256d vq = _mm256_loadu_pd(q + k);
        __m256d shifted = _mm256_loadu_pd(prev + k - 1);
        __m256d same = _mm256_loadu_pd(prev + k);
        __m256d r = _mm256_fmadd_pd(vp, shifted, _mm256_mul_pd(vq, same));
        _mm256_storeu_pd(next + k, r);
    }
    for (; k < len; ++k) {
        next[k] = std::fma(p[k], prev[k - 1], q[k] * prev[k]);
    }
}

}  // namespace purebirth::kernels

#endif
