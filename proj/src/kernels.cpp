#include "numindex/kernels.hpp"

#include <cmath>

namespace numindex {

namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

void madd_scalar(const double* a, const double* b, double* dst, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] += a[i] * b[i];
}

void mul_inplace_scalar(double* x, const double* r, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= r[i];
}

void recip_scalar(const double* a, double* dst, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = 1.0 / a[i];
}

void rowmax_scalar(const double* a, double* best, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] > best[i])
            best[i] = a[i];
    }
}

void masked_abs_max_scalar(const double* gate, double thresh,
                           const double* val, double* best, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (gate[i] >= thresh) {
            const double v = std::fabs(val[i]);
            if (v > best[i])
                best[i] = v;
        }
    }
}

double reduce_max_scalar(const double* a, std::size_t n)
{
    double best = -HUGE_VAL;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] > best)
            best = a[i];
    }
    return best;
}

double dot_scalar(const double* a, const double* b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i];
    return acc;
}

const Kernels kScalar = {
    "scalar",          axpy_scalar,   madd_scalar,
    mul_inplace_scalar, recip_scalar, rowmax_scalar,
    masked_abs_max_scalar, reduce_max_scalar, dot_scalar,
};

}   // namespace

const Kernels& scalar_kernels()
{
    return kScalar;
}

#ifndef NUMINDEX_HAVE_AVX2_TU
const Kernels* avx2_kernels()
{
    return nullptr;
}
#endif

const Kernels& active_kernels()
{
    static const Kernels* chosen = [] {
        const Kernels* simd = avx2_kernels();
        return simd ? simd : &kScalar;
    }();
    return *chosen;
}

}   // namespace numindex
