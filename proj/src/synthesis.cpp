#include "fourfold/synthesis.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "fourfold/kernels.hpp"
#include "fourfold/rng.hpp"

namespace fourfold {

namespace {

// FFTW's planner is not thread-safe; executions of distinct plans are.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// In-place DFT, FFTW sign convention (-1 forward, +1 backward), unnormalized.
void dft_inplace(std::vector<cdouble>& data, int sign) {
    const int n = static_cast<int>(data.size());
    fftw_complex* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace

std::ptrdiff_t lag_to_samples(double tau, double dt) {
    const double k = tau / dt;
    const double rounded = std::round(k);
    if (std::abs(k - rounded) > 1e-6) {
        throw std::invalid_argument("lag " + std::to_string(tau) +
                                    " is not representable on the sample grid (dt = " +
                                    std::to_string(dt) + ")");
    }
    return static_cast<std::ptrdiff_t>(rounded);
}

FieldTrace synth_thermal(const CoherenceModel& model, double intensity, double duration, double dt,
                         std::uint64_t seed) {
    validate(model);
    if (!(intensity > 0.0)) {
        throw std::invalid_argument("synth_thermal: intensity must be positive");
    }
    if (!(dt > 0.0) || dt > model.tc / 20.0 * (1.0 + 1e-12)) {
        throw std::invalid_argument("synth_thermal: requires dt <= Tc/20, got dt = " +
                                    std::to_string(dt) + ", Tc = " + std::to_string(model.tc));
    }
    if (duration < 100.0 * model.tc * (1.0 - 1e-12)) {
        throw std::invalid_argument("synth_thermal: requires duration >= 100*Tc, got duration = " +
                                    std::to_string(duration) + ", Tc = " + std::to_string(model.tc));
    }

    const std::size_t n = static_cast<std::size_t>(std::llround(duration / dt));
    const std::size_t nfft = next_pow2(std::max<std::size_t>(n, 64));

    // Power spectrum: DFT of the periodized covariance c_j = I0 * gamma(j*dt).
    std::vector<cdouble> cov(nfft);
    for (std::size_t j = 0; j < nfft; ++j) {
        const std::size_t wrapped = std::min(j, nfft - j);
        cov[j] = intensity * model.envelope(static_cast<double>(wrapped) * dt);
    }
    dft_inplace(cov, FFTW_FORWARD);

    // sqrt(S_k / N); negative rounding residue clamped to zero.
    std::vector<double> amp(nfft);
    const double inv_n = 1.0 / static_cast<double>(nfft);
    for (std::size_t k = 0; k < nfft; ++k) {
        amp[k] = std::sqrt(std::max(cov[k].real(), 0.0) * inv_n);
    }

    GaussianStream rng(seed);
    std::vector<cdouble> spec(nfft);
    for (std::size_t k = 0; k < nfft; ++k) spec[k] = rng.complex_normal();
    std::vector<cdouble> shaped(nfft);
    kernels::active().scale_by_real(spec.data(), amp.data(), shaped.data(), nfft);
    dft_inplace(shaped, FFTW_BACKWARD);

    FieldTrace out;
    out.samples.assign(shaped.begin(), shaped.begin() + static_cast<std::ptrdiff_t>(n));
    out.dt = dt;
    out.carrier = model.omega;
    out.mean_intensity_nominal = intensity;
    return out;
}

FieldTrace synth_coherent(double intensity, double phase, double duration, double dt,
                          double carrier) {
    if (!(intensity > 0.0)) {
        throw std::invalid_argument("synth_coherent: intensity must be positive");
    }
    if (!(dt > 0.0) || !(duration > 0.0)) {
        throw std::invalid_argument("synth_coherent: duration and dt must be positive");
    }
    const std::size_t n = static_cast<std::size_t>(std::llround(duration / dt));
    FieldTrace out;
    out.samples.assign(n, std::polar(std::sqrt(intensity), phase));
    out.dt = dt;
    out.carrier = carrier;
    out.mean_intensity_nominal = intensity;
    return out;
}

std::pair<FieldTrace, FieldTrace> split_common_origin(const FieldTrace& origin, bool random_phase,
                                                      std::uint64_t seed) {
    validate(origin);
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    FieldTrace a = origin;
    kernels::active().scale(a.samples.data(), cdouble(inv_sqrt2, 0.0), a.samples.size());
    a.mean_intensity_nominal = origin.mean_intensity_nominal / 2.0;

    FieldTrace b = origin;
    cdouble factor(inv_sqrt2, 0.0);
    if (random_phase) {
        GaussianStream rng(seed);
        factor *= std::polar(1.0, rng.phase());
    }
    kernels::active().scale(b.samples.data(), factor, b.samples.size());
    b.mean_intensity_nominal = origin.mean_intensity_nominal / 2.0;
    return {std::move(a), std::move(b)};
}

std::pair<FieldTrace, FieldTrace> make_partially_coherent_pair(const CoherenceModel& model,
                                                               double intensity_a, double intensity_b,
                                                               cdouble gamma_target, double duration,
                                                               double dt, std::uint64_t seed) {
    const double g2 = std::norm(gamma_target);
    if (g2 > 1.0 + 1e-12) {
        throw std::invalid_argument("make_partially_coherent_pair: |gamma_target| must be <= 1");
    }
    if (!(intensity_b > 0.0)) {
        throw std::invalid_argument("make_partially_coherent_pair: intensity_b must be positive");
    }
    FieldTrace a = synth_thermal(model, intensity_a, duration, dt, derive_seed(seed, 1));
    FieldTrace ind = synth_thermal(model, intensity_a, duration, dt, derive_seed(seed, 2));

    // Vbar = gamma*V + sqrt(1-|gamma|^2)*V_ind, then rescaled to intensity_b.
    const double resid = std::sqrt(std::max(0.0, 1.0 - g2));
    const double rescale = std::sqrt(intensity_b / intensity_a);
    FieldTrace b;
    b.samples.resize(a.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        b.samples[i] = (gamma_target * a.samples[i] + resid * ind.samples[i]) * rescale;
    }
    b.dt = dt;
    b.carrier = model.omega;
    b.mean_intensity_nominal = intensity_b;
    return {std::move(a), std::move(b)};
}

std::vector<cdouble> estimate_gamma(const FieldTrace& a, const FieldTrace& b,
                                    const std::vector<double>& tau_grid) {
    if (a.dt != b.dt) {
        throw std::invalid_argument("estimate_gamma: traces must share dt");
    }
    const auto& k = kernels::active();
    const std::ptrdiff_t na = static_cast<std::ptrdiff_t>(a.size());
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(b.size());

    std::vector<cdouble> out;
    out.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        const std::ptrdiff_t lag = lag_to_samples(tau, a.dt);
        // overlap window: indices t with t in [0,na) and t+lag in [0,nb)
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -lag);
        const std::ptrdiff_t hi = std::min(na, nb - lag);
        if (hi - lo < 16) {
            throw std::invalid_argument("estimate_gamma: overlap too short at lag " +
                                        std::to_string(tau));
        }
        const std::size_t len = static_cast<std::size_t>(hi - lo);
        const cdouble num = k.cdot(a.samples.data() + lo, b.samples.data() + lo + lag, len);
        // intensities over the same windows make |gamma_hat| <= 1 a hard identity
        std::vector<double> ia(len), ib(len);
        k.mag_sq(a.samples.data() + lo, ia.data(), len);
        k.mag_sq(b.samples.data() + lo + lag, ib.data(), len);
        const double denom = std::sqrt(k.sum(ia.data(), len) * k.sum(ib.data(), len));
        out.push_back(denom > 0.0 ? num / denom : cdouble(0.0, 0.0));
    }
    return out;
}

} // namespace fourfold
