#include <arm_neon.h>

#include "qlsa/kernels.hpp"

namespace qlsa::kernels::neon {
namespace {

double dot(const double* x, const double* y, std::size_t n)
{
    float64x2_t a0 = vdupq_n_f64(0.0), a1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a0 = vfmaq_f64(a0, vld1q_f64(x + i), vld1q_f64(y + i));
        a1 = vfmaq_f64(a1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    double s = vaddvq_f64(vaddq_f64(a0, a1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double norm2(const double* x, std::size_t n) { return dot(x, x, n); }

// Separate multiply and add so results equal the scalar kernel exactly.
void axpy(double a, const double* x, double* y, std::size_t n)
{
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
    for (; i < n; ++i) y[i] += a * x[i];
}

void xpby(const double* x, double b, double* y, std::size_t n)
{
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vaddq_f64(vld1q_f64(x + i), vmulq_f64(vb, vld1q_f64(y + i))));
    for (; i < n; ++i) y[i] = x[i] + b * y[i];
}

void spmv(std::size_t rows, const std::int32_t* row_ptr, const std::int32_t* col, const double* val, const double* x,
          double* y)
{
    for (std::size_t r = 0; r < rows; ++r) {
        std::int32_t k = row_ptr[r];
        const std::int32_t end = row_ptr[r + 1];
        float64x2_t acc = vdupq_n_f64(0.0);
        for (; k + 2 <= end; k += 2) {
            const double pair[2] = {x[col[k]], x[col[k + 1]]};
            acc = vfmaq_f64(acc, vld1q_f64(val + k), vld1q_f64(pair));
        }
        double s = vaddvq_f64(acc);
        for (; k < end; ++k) s += val[k] * x[col[k]];
        y[r] = s;
    }
}

}  // namespace

const KernelTable table{Isa::Neon, dot, norm2, axpy, xpby, spmv};

}  // namespace qlsa::kernels::neon
