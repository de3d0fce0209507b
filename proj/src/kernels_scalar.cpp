#include "fourfold/kernels.hpp"

#include <numbers>

namespace fourfold::kernels {

namespace {

void mag_sq_scalar(const cdouble* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = x[i].real();
        const double im = x[i].imag();
        out[i] = re * re + im * im;
    }
}

void mix_split_scalar(const cdouble* a, const cdouble* b, cdouble* sum_out, cdouble* diff_out,
                      std::size_t n) {
    const double c = std::numbers::sqrt2 / 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cdouble ai = a[i];
        const cdouble bi = b[i];
        sum_out[i] = (ai + bi) * c;
        diff_out[i] = (ai - bi) * c;
    }
}

void scale_scalar(cdouble* x, cdouble factor, std::size_t n) {
    const double fr = factor.real();
    const double fi = factor.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double re = x[i].real();
        const double im = x[i].imag();
        x[i] = {re * fr - im * fi, re * fi + im * fr};
    }
}

void scale_by_real_scalar(const cdouble* x, const double* s, cdouble* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = {x[i].real() * s[i], x[i].imag() * s[i]};
    }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

cdouble cdot_scalar(const cdouble* a, const cdouble* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double sum_sq_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

} // namespace

const Ops& scalar() {
    static const Ops ops{
        "scalar",         mag_sq_scalar, mix_split_scalar, scale_scalar, scale_by_real_scalar,
        dot_scalar,       cdot_scalar,   sum_scalar,       sum_sq_scalar,
    };
    return ops;
}

} // namespace fourfold::kernels
