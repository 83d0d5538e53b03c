#include "qlsa/kernels.hpp"

namespace qlsa::kernels::scalar {
namespace {

double dot(const double* x, const double* y, std::size_t n)
{
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double norm2(const double* x, std::size_t n) { return dot(x, x, n); }

void axpy(double a, const double* x, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpby(const double* x, double b, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + b * y[i];
}

void spmv(std::size_t rows, const std::int32_t* row_ptr, const std::int32_t* col, const double* val, const double* x,
          double* y)
{
    for (std::size_t r = 0; r < rows; ++r) {
        double s = 0.0;
        for (std::int32_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += val[k] * x[col[k]];
        y[r] = s;
    }
}

}  // namespace

const KernelTable table{Isa::Scalar, dot, norm2, axpy, xpby, spmv};

}  // namespace qlsa::kernels::scalar
