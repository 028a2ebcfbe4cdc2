// NEON variant of the bidiagonal row step; aarch64 only, where NEON is
// baseline and needs no runtime probe.
#include "purebirth/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace purebirth::kernels {

void row_step_neon(const double* p, const double* q, const double* prev, double* next, std::size_t len) {
    std::size_t k = 1;
    for (; k + 2 <= len; k += 2) {
        float64x2_t vp = vld1q_f64(p + k);
        float64x2_t vq = vld1q_f64(q + k);
        float64x2_t shifted = vld1q_f64(prev + k - 1);
        float64x2_t same = vld1q_f64(prev + k);
        float64x2_t r = vfmaq_f64(vmulq_f64(vq, same), vp, shifted);
        vst1q_f64(next + k, r);
    }
    for (; k < len; ++k) {
        next[k] = std::fma(p[k], prev[k - 1], q[k] * prev[k]);
    }
}

}  // namespace purebirth::kernels

#endif
