// Float64 inner loop of the bidiagonal distribution recurrences:
// next[k] = p[k] * prev[k-1] + q[k] * prev[k].
//
// A scalar reference kernel defines the semantics; AVX2 (x86-64) and NEON
// (aarch64) variants are selected at runtime and must be bit-identical to
// the reference. All variants evaluate fma(p, prev[k-1], q * prev[k]) so
// the rounding sequence is the same everywhere. The element k = 0 has a
// boundary rule and is left to the caller.
#pragma once

#include <cstddef>

namespace purebirth::kernels {

using RowStepFn = void (*)(const double* p, const double* q, const double* prev, double* next, std::size_t len);

// Reference implementation; processes k in [1, len).
void row_step_scalar(const double* p, const double* q, const double* prev, double* next, std::size_t len);

#if defined(__x86_64__) || defined(_M_X64)
void row_step_avx2(const double* p, const double* q, const double* prev, double* next, std::size_t len);
bool avx2_supported();
#endif

#if defined(__aarch64__)
void row_step_neon(const double* p, const double* q, const double* prev, double* next, std::size_t len);
#endif

// Best kernel for this machine, honoring PUREBIRTH_KERNEL=scalar|avx2|neon.
RowStepFn active_row_step();
const char* active_kernel_name();

}  // namespace purebirth::kernels
