// AVX2 variants of the sampling kernels.  This file is compiled with
// -mavx2 and only dispatched to after a runtime CPU check.  Elementwise
// kernels use mul+add (never fused multiply-add) so results stay bitwise
// identical to the scalar reference.

#include "numindex/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace numindex {

namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n)
{
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d vx = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
    }
    for (; i < n; ++i)
        y[i] += a * x[i];
}

void madd_avx2(const double* a, const double* b, double* dst, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vd = _mm256_loadu_pd(dst + i);
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(dst + i, _mm256_add_pd(vd, _mm256_mul_pd(va, vb)));
    }
    for (; i < n; ++i)
        dst[i] += a[i] * b[i];
}

void mul_inplace_avx2(double* x, const double* r, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vr = _mm256_loadu_pd(r + i);
        _mm256_storeu_pd(x + i, _mm256_mul_pd(vx, vr));
    }
    for (; i < n; ++i)
        x[i] *= r[i];
}

void recip_avx2(const double* a, double* dst, std::size_t n)
{
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_div_pd(one, _mm256_loadu_pd(a + i)));
    for (; i < n; ++i)
        dst[i] = 1.0 / a[i];
}

void rowmax_avx2(const double* a, double* best, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(best + i);
        _mm256_storeu_pd(best + i, _mm256_max_pd(vb, va));
    }
    for (; i < n; ++i) {
        if (a[i] > best[i])
            best[i] = a[i];
    }
}

void masked_abs_max_avx2(const double* gate, double thresh, const double* val,
                         double* best, std::size_t n)
{
    const __m256d vt = _mm256_set1_pd(thresh);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vg = _mm256_loadu_pd(gate + i);
        const __m256d keep = _mm256_cmp_pd(vg, vt, _CMP_GE_OQ);
        const __m256d vv =
            _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(val + i));
        const __m256d vb = _mm256_loadu_pd(best + i);
        const __m256d candidate = _mm256_max_pd(vb, vv);
        _mm256_storeu_pd(best + i, _mm256_blendv_pd(vb, candidate, keep));
    }
    for (; i < n; ++i) {
        if (gate[i] >= thresh) {
            const double v = std::fabs(val[i]);
            if (v > best[i])
                best[i] = v;
        }
    }
}

double reduce_max_avx2(const double* a, std::size_t n)
{
    double best = -HUGE_VAL;
    std::size_t i = 0;
    if (n >= 4) {
        __m256d vbest = _mm256_loadu_pd(a);
        for (i = 4; i + 4 <= n; i += 4)
            vbest = _mm256_max_pd(vbest, _mm256_loadu_pd(a + i));
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, vbest);
        for (double lane : lanes) {
            if (lane > best)
                best = lane;
        }
    }
    for (; i < n; ++i) {
        if (a[i] > best)
            best = a[i];
    }
    return best;
}

double dot_avx2(const double* a, const double* b, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i)
        sum += a[i] * b[i];
    return sum;
}

const Kernels kAvx2 = {
    "avx2",           axpy_avx2,   madd_avx2,
    mul_inplace_avx2, recip_avx2,  rowmax_avx2,
    masked_abs_max_avx2, reduce_max_avx2, dot_avx2,
};

}   // namespace

const Kernels* avx2_kernels()
{
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

}   // namespace numindex
