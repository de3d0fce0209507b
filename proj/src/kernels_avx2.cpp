// AVX2+FMA kernel variants. This TU is compiled with -mavx2 -mfma and is only
// referenced after a runtime cpu check. Vector main loops, scalar tails.

#include "fourfold/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <numbers>

namespace fourfold::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(s, s);
    return _mm_cvtsd_f64(_mm_add_sd(s, swapped));
}

void mag_sq_avx2(const cdouble* x, double* out, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x0 = _mm256_loadu_pd(p + 2 * i);     // re0 im0 re1 im1
        __m256d x1 = _mm256_loadu_pd(p + 2 * i + 4); // re2 im2 re3 im3
        __m256d h = _mm256_hadd_pd(_mm256_mul_pd(x0, x0), _mm256_mul_pd(x1, x1));
        // h = [|z0|^2, |z2|^2, |z1|^2, |z3|^2]; restore order
        __m256d m = _mm256_permute4x64_pd(h, 0xD8);
        _mm256_storeu_pd(out + i, m);
    }
    for (; i < n; ++i) {
        const double re = x[i].real(), im = x[i].imag();
        out[i] = re * re + im * im;
    }
}

void mix_split_avx2(const cdouble* a, const cdouble* b, cdouble* sum_out, cdouble* diff_out,
                    std::size_t n) {
    const double c = std::numbers::sqrt2 / 2.0;
    const __m256d cv = _mm256_set1_pd(c);
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    double* ps = reinterpret_cast<double*>(sum_out);
    double* pd = reinterpret_cast<double*>(diff_out);
    const std::size_t m = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256d av = _mm256_loadu_pd(pa + i);
        __m256d bv = _mm256_loadu_pd(pb + i);
        _mm256_storeu_pd(ps + i, _mm256_mul_pd(_mm256_add_pd(av, bv), cv));
        _mm256_storeu_pd(pd + i, _mm256_mul_pd(_mm256_sub_pd(av, bv), cv));
    }
    for (; i < m; ++i) {
        ps[i] = (pa[i] + pb[i]) * c;
        pd[i] = (pa[i] - pb[i]) * c;
    }
}

void scale_avx2(cdouble* x, cdouble factor, std::size_t n) {
    const __m256d fr = _mm256_set1_pd(factor.real());
    const __m256d fi = _mm256_set1_pd(factor.imag());
    double* p = reinterpret_cast<double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * i);
        __m256d sw = _mm256_permute_pd(v, 0x5); // im re im re
        // (re*fr - im*fi, im*fr + re*fi)
        __m256d r = _mm256_addsub_pd(_mm256_mul_pd(v, fr), _mm256_mul_pd(sw, fi));
        _mm256_storeu_pd(p + 2 * i, r);
    }
    for (; i < n; ++i) {
        const double re = x[i].real(), im = x[i].imag();
        x[i] = {re * factor.real() - im * factor.imag(), re * factor.imag() + im * factor.real()};
    }
}

void scale_by_real_avx2(const cdouble* x, const double* s, cdouble* out, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d sv = _mm256_loadu_pd(s + i);
        __m256d lo = _mm256_permute4x64_pd(sv, 0x50); // s0 s0 s1 s1
        __m256d hi = _mm256_permute4x64_pd(sv, 0xFA); // s2 s2 s3 s3
        _mm256_storeu_pd(po + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(px + 2 * i), lo));
        _mm256_storeu_pd(po + 2 * i + 4, _mm256_mul_pd(_mm256_loadu_pd(px + 2 * i + 4), hi));
    }
    for (; i < n; ++i) {
        out[i] = {x[i].real() * s[i], x[i].imag() * s[i]};
    }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

cdouble cdot_avx2(const cdouble* a, const cdouble* b, std::size_t n) {
    const __m256d odd_neg = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d av = _mm256_loadu_pd(pa + 2 * i);
        __m256d bv = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(av, bv, acc_re); // ar*br, ai*bi pairs
        __m256d cross = _mm256_mul_pd(av, _mm256_permute_pd(bv, 0x5)); // ar*bi, ai*br
        acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(cross, odd_neg)); // ar*bi - ai*br
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double sum_sq_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

} // namespace

const Ops& avx2() {
    static const Ops ops{
        "avx2",    mag_sq_avx2, mix_split_avx2, scale_avx2, scale_by_real_avx2,
        dot_avx2,  cdot_avx2,   sum_avx2,       sum_sq_avx2,
    };
    return ops;
}

} // namespace fourfold::kernels

#else
#error "kernels_avx2.cpp requires -mavx2 -mfma"
#endif
