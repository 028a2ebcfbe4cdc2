#include "purebirth/kernels.hpp"

#include <cmath>

namespace purebirth::kernels {

void row_step_scalar(const double* p, const double* q, const double* prev, double* next, std::size_t len) {
    for (std::size_t k = 1; k < len; ++k) {
        next[k] = std::fma(p[k], prev[k - 1], q[k] * prev[k]);
    }
}

}  // namespace purebirth::kernels
