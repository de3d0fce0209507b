#pragma once

// Arithmetic kernels behind the field/detection hot loops. Each operation has a
// scalar reference implementation and, on x86 with AVX2+FMA, a vectorized variant.
// The active table is chosen once at startup: FOURFOLD_KERNELS=scalar|avx2 wins if
// set and usable, otherwise the best instruction set the CPU reports.
//
// SIMD variants reassociate sums, so results may differ from scalar by rounding;
// the equivalence tests pin agreement to 1e-9 relative.

#include <complex>
#include <cstddef>

namespace fourfold::kernels {

using cdouble = std::complex<double>;

struct Ops {
    const char* name;

    // out[i] = |x[i]|^2
    void (*mag_sq)(const cdouble* x, double* out, std::size_t n);

    // sum_out[i] = (a[i]+b[i])*inv_sqrt2, diff_out[i] = (a[i]-b[i])*inv_sqrt2
    void (*mix_split)(const cdouble* a, const cdouble* b, cdouble* sum_out, cdouble* diff_out,
                      std::size_t n);

    // x[i] *= factor
    void (*scale)(cdouble* x, cdouble factor, std::size_t n);

    // out[i] = x[i] * s[i]   (s real, e.g. spectral amplitudes)
    void (*scale_by_real)(const cdouble* x, const double* s, cdouble* out, std::size_t n);

    // sum of a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);

    // sum of conj(a[i])*b[i]
    cdouble (*cdot)(const cdouble* a, const cdouble* b, std::size_t n);

    double (*sum)(const double* x, std::size_t n);
    double (*sum_sq)(const double* x, std::size_t n);
};

const Ops& scalar();

// True if this binary carries an AVX2 table and the CPU supports it.
bool avx2_available();

// AVX2 table; call only when avx2_available(). (Exposed for equivalence tests.)
const Ops& avx2();

// Dispatch result, resolved once.
const Ops& active();

} // namespace fourfold::kernels
