#pragma once

#include <cstddef>

namespace numindex {

/**
 * Batched float primitives used by the sampling paths.  Two
 * implementations ship: a portable scalar reference and an AVX2 variant
 * selected at runtime.  Elementwise kernels (axpy, madd, mul_inplace,
 * recip, rowmax, masked_abs_max) are bitwise-identical across variants;
 * the dot reduction may differ by association order only.
 */
struct Kernels {
    const char* name;

    /** y += a * x */
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    /** dst += a ⊙ b */
    void (*madd)(const double* a, const double* b, double* dst, std::size_t n);
    /** x = x ⊙ r */
    void (*mul_inplace)(double* x, const double* r, std::size_t n);
    /** dst = 1 / a */
    void (*recip)(const double* a, double* dst, std::size_t n);
    /** best = max(best, a) elementwise */
    void (*rowmax)(const double* a, double* best, std::size_t n);
    /** best_i = max(best_i, |val_i|) wherever gate_i >= thresh */
    void (*masked_abs_max)(const double* gate, double thresh,
                           const double* val, double* best, std::size_t n);
    double (*reduce_max)(const double* a, std::size_t n);
    double (*dot)(const double* a, const double* b, std::size_t n);
};

const Kernels& scalar_kernels();

/** AVX2 variant, or nullptr when the CPU or build lacks support. */
const Kernels* avx2_kernels();

/** The preferred variant for this process. */
const Kernels& active_kernels();

}   // namespace numindex
