#include "purebirth/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace purebirth::kernels {

namespace {

struct Selection {
    RowStepFn fn;
    const char* name;
};

Selection select() {
    const char* env = std::getenv("PUREBIRTH_KERNEL");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return {row_step_scalar, "scalar"};
#if defined(__x86_64__) || defined(_M_X64)
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return {row_step_avx2, "avx2"};
#endif
#if defined(__aarch64__)
        if (std::strcmp(env, "neon") == 0) return {row_step_neon, "neon"};
#endif
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return {row_step_avx2, "avx2"};
#endif
#if defined(__aarch64__)
    return {row_step_neon, "neon"};
#endif
    return {row_step_scalar, "scalar"};
}

const Selection& cached() {
    static const Selection s = select();
    return s;
}

}  // namespace

RowStepFn active_row_step() { return cached().fn; }

const char* active_kernel_name() { return cached().name; }

}  // namespace purebirth::kernels
