#include "fourfold/fringe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fourfold {

namespace {

struct LinearFit {
    double b = 0.0, c = 0.0, s = 0.0; // y ~ b + c*cos(w x) + s*sin(w x)
    double sse = std::numeric_limits<double>::infinity();
};

// Solves the 3x3 normal equations directly.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y, double period) {
    const double w = 2.0 * M_PI / period;
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double rhs[3] = {0, 0, 0};
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double basis[3] = {1.0, std::cos(w * x[k]), std::sin(w * x[k])};
        for (int i = 0; i < 3; ++i) {
            rhs[i] += basis[i] * y[k];
            for (int j = 0; j < 3; ++j) m[i][j] += basis[i] * basis[j];
        }
    }
    // Gaussian elimination with partial pivoting.
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[perm[r]][col]) > std::abs(m[perm[pivot]][col])) pivot = r;
        std::swap(perm[col], perm[pivot]);
        const double diag = m[perm[col]][col];
        if (std::abs(diag) < 1e-12) return {}; // degenerate design, e.g. x span too small
        for (int r = col + 1; r < 3; ++r) {
            const double f = m[perm[r]][col] / diag;
            for (int c2 = col; c2 < 3; ++c2) m[perm[r]][c2] -= f * m[perm[col]][c2];
            rhs[perm[r]] -= f * rhs[perm[col]];
        }
    }
    double sol[3];
    for (int col = 2; col >= 0; --col) {
        double acc = rhs[perm[col]];
        for (int c2 = col + 1; c2 < 3; ++c2) acc -= m[perm[col]][c2] * sol[c2];
        sol[col] = acc / m[perm[col]][col];
    }
    LinearFit fit;
    fit.b = sol[0];
    fit.c = sol[1];
    fit.s = sol[2];
    fit.sse = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double model = sol[0] + sol[1] * std::cos(w * x[k]) + sol[2] * std::sin(w * x[k]);
        const double r = y[k] - model;
        fit.sse += r * r;
    }
    return fit;
}

void check_inputs(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("fringe fit: x/y size mismatch");
    if (x.size() < 5) throw std::invalid_argument("fringe fit: need at least 5 points");
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!std::isfinite(x[k]) || !std::isfinite(y[k]))
            throw std::invalid_argument("fringe fit: non-finite input");
}

FringeFit package(std::size_t n, double period, const LinearFit& lf) {
    FringeFit out;
    out.period = period;
    out.baseline = lf.b;
    const double amp = std::hypot(lf.c, lf.s);
    out.visibility = lf.b != 0.0 ? amp / lf.b : 0.0;
    // c*cos + s*sin = amp*cos(theta - atan2(s, c)), so phi0 = -atan2(s, c).
    out.phi0 = amp > 0.0 ? -std::atan2(lf.s, lf.c) : 0.0;
    out.residual_rms = std::sqrt(lf.sse / static_cast<double>(n));
    return out;
}

} // namespace

FringeFit fit_fringe_fixed_period(const std::vector<double>& x, const std::vector<double>& y,
                                  double period) {
    check_inputs(x, y);
    if (!(period > 0.0)) throw std::invalid_argument("fringe fit: period must be positive");
    const LinearFit lf = linear_fit(x, y, period);
    if (!std::isfinite(lf.sse)) throw std::invalid_argument("fringe fit: degenerate design");
    return package(x.size(), period, lf);
}

FringeFit fit_fringe(const std::vector<double>& x, const std::vector<double>& y,
                     double period_hint) {
    check_inputs(x, y);
    if (!(period_hint > 0.0)) throw std::invalid_argument("fringe fit: period hint must be positive");
    const auto [x_min, x_max] = std::minmax_element(x.begin(), x.end());
    if (*x_max - *x_min < period_hint)
        throw std::invalid_argument("fringe fit: x span must cover at least one period");

    constexpr int n_scan = 201;
    double best_period = period_hint;
    double best_sse = std::numeric_limits<double>::infinity();
    const double lo = 0.9 * period_hint, hi = 1.1 * period_hint;
    for (int k = 0; k < n_scan; ++k) {
        const double p = lo + (hi - lo) * static_cast<double>(k) / (n_scan - 1);
        const double sse = linear_fit(x, y, p).sse;
        if (sse < best_sse) {
            best_sse = sse;
            best_period = p;
        }
    }
    // Golden-section refinement around the best grid period.
    const double step = (hi - lo) / (n_scan - 1);
    double a = std::max(lo, best_period - step), b = std::min(hi, best_period + step);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = linear_fit(x, y, c).sse, fd = linear_fit(x, y, d).sse;
    for (int it = 0; it < 80 && (b - a) > 1e-12 * period_hint; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = linear_fit(x, y, c).sse;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = linear_fit(x, y, d).sse;
        }
    }
    const double p_final = 0.5 * (a + b);
    return package(x.size(), p_final, linear_fit(x, y, p_final));
}

} // namespace fourfold
