#include "fourfold/pulsed_detection.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fourfold/kernels.hpp"

namespace fourfold {

namespace {

double profile_width(const PulseProfile& p) {
    return p.width > 0.0 ? p.width : 1.0;
}

} // namespace

cdouble overlap_beta(const PulseProfile& f, const PulseProfile& g, double offset) {
    // Integrand support: supp(f) intersected with supp(g) shifted by -offset.
    const double lo = std::max(-f.half_support(), -g.half_support() - offset);
    const double hi = std::min(f.half_support(), g.half_support() - offset);
    if (hi <= lo) return {0.0, 0.0};
    const double step_target = std::min(profile_width(f), profile_width(g)) / 64.0;
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step_target));
    const double step = (hi - lo) / static_cast<double>(n);
    cdouble acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const double t = lo + (static_cast<double>(k) + 0.5) * step;
        acc += std::conj(f.value(t)) * g.value(t + offset);
    }
    acc *= step;
    // Cauchy-Schwarz bound can be grazed by quadrature error at offset 0.
    const double mag = std::abs(acc);
    if (mag > 1.0) acc /= mag;
    return acc;
}

cdouble detector_overlap_factor(const PulseProfile& f, const PulseProfile& g, double separation,
                                double carrier, long n_a, double d_a, long n_b, double d_b) {
    const double t_a = static_cast<double>(n_a) * separation + d_a;
    const double t_b = static_cast<double>(n_b) * separation + d_b;
    return overlap_beta(f, g, d_b - d_a) * std::polar(1.0, -carrier * (t_b - t_a));
}

double mean_photocurrent(const PulseTrain& train, const DetectorSpec& det) {
    validate(train);
    double acc = 0.0;
    for (const auto& a : train.amplitudes) acc += std::norm(a);
    return det.charge * train.rep_rate * acc / static_cast<double>(train.amplitudes.size());
}

std::pair<std::ptrdiff_t, std::ptrdiff_t> valid_pulse_window(std::size_t n_a, std::size_t n_b,
                                                             const PulseOffsets& off) {
    const auto na = static_cast<std::ptrdiff_t>(n_a);
    const auto nb = static_cast<std::ptrdiff_t>(n_b);
    std::ptrdiff_t lo = 0;
    lo = std::max(lo, -std::min<std::ptrdiff_t>(off.n1, off.n1p));
    lo = std::max(lo, -std::min<std::ptrdiff_t>(off.n2, off.n2p));
    std::ptrdiff_t hi = na - std::max<std::ptrdiff_t>(off.n1, off.n1p);
    hi = std::min(hi, nb - std::max<std::ptrdiff_t>(off.n2, off.n2p));
    if (hi - lo < 16)
        throw std::invalid_argument("valid_pulse_window: fewer than 16 usable pulse slots");
    return {lo, hi};
}

PulsedCoincidence pulsed_coincidence_amplitude(const PulseTrain& a, const PulseTrain& b,
                                               const PulseOffsets& off, cdouble beta,
                                               cdouble beta_prime, const DetectorSpec& det) {
    validate(a);
    validate(b);
    if (std::abs(a.separation - b.separation) > 1e-12 * a.separation)
        throw std::invalid_argument("pulsed_coincidence_amplitude: separation mismatch");
    const auto [j_lo, j_hi] = valid_pulse_window(a.amplitudes.size(), b.amplitudes.size(), off);
    const auto n_win = static_cast<double>(j_hi - j_lo);

    double r11p = 0.0, r22p = 0.0, r12p = 0.0, r1p2 = 0.0;
    cdouble m1221{0.0, 0.0}, m1212{0.0, 0.0};
    for (std::ptrdiff_t j = j_lo; j < j_hi; ++j) {
        const cdouble a1 = a.amplitudes[static_cast<std::size_t>(j + off.n1)];
        const cdouble a1p = a.amplitudes[static_cast<std::size_t>(j + off.n1p)];
        const cdouble b2 = b.amplitudes[static_cast<std::size_t>(j + off.n2)];
        const cdouble b2p = b.amplitudes[static_cast<std::size_t>(j + off.n2p)];
        const double ia1 = std::norm(a1), ia1p = std::norm(a1p);
        const double ib2 = std::norm(b2), ib2p = std::norm(b2p);
        r11p += ia1 * ia1p;
        r22p += ib2 * ib2p;
        r12p += ia1 * ib2p;
        r1p2 += ia1p * ib2;
        m1221 += std::conj(a1) * b2 * std::conj(b2p) * a1p;
        m1212 += std::conj(a1) * b2 * std::conj(a1p) * b2p;
    }
    const double scale = det.charge * det.charge * a.rep_rate / n_win;
    PulsedCoincidence out;
    out.r11p = scale * r11p;
    out.r22p = scale * r22p;
    out.r12p = scale * r12p;
    out.r1p2 = scale * r1p2;
    out.r1221 = scale * 2.0 * std::real(beta * std::conj(beta_prime) * m1221);
    out.r1212 = scale * 2.0 * std::real(beta * beta_prime * m1212);
    out.rate = out.r11p + out.r22p + out.r12p + out.r1p2 - out.r1221 - out.r1212;
    return out;
}

namespace {

struct PulsedGrid {
    std::ptrdiff_t j_lo = 0, j_hi = 0; // valid slot window
    std::ptrdiff_t slot_pad = 0;       // margin slots on each side
    std::size_t spp = 0;               // samples per slot
    double dt = 0.0;                   // grid step
    double separation = 0.0;
    double d_range = 0.0;              // spread of the sub-slot offsets
    std::size_t n_samples = 0;

    // Coincidence lag half-width in samples. k-1 covers the response
    // correlation of aligned pulse pairs; pairs from arms with different
    // sub-slot offsets sit up to d_range later, so the window stretches to
    // keep every same-slot pair's full charge product inside it.
    std::ptrdiff_t lag_half_width(std::ptrdiff_t k) const {
        return k - 1 + static_cast<std::ptrdiff_t>(std::ceil(d_range / dt));
    }

    // Sample m sits at time t_start + (m + 0.5) * dt.
    double t_start() const {
        return (static_cast<double>(j_lo - slot_pad) - 0.5) * separation;
    }
};

PulsedGrid make_grid(const PulseTrain& a, const PulseTrain& b, const PulseOffsets& off,
                     const DetectorSpec& det, std::size_t samples_per_slot) {
    if (std::abs(a.separation - b.separation) > 1e-12 * a.separation)
        throw std::invalid_argument("pulsed waveform route: separation mismatch");
    if (samples_per_slot < 64)
        throw std::invalid_argument("pulsed waveform route: need >= 64 samples per slot");
    if (!(det.resolve_time > 0.0) || det.resolve_time >= a.separation)
        throw std::invalid_argument(
            "pulsed waveform route: detector resolve time must be positive and shorter than the "
            "pulse separation");
    for (double d : {off.d1, off.d2, off.d1p, off.d2p})
        if (std::abs(d) > 0.25 * a.separation)
            throw std::invalid_argument(
                "pulsed waveform route: sub-slot offset exceeds separation/4; fold whole slots "
                "into the integer part");
    PulsedGrid g;
    std::tie(g.j_lo, g.j_hi) = valid_pulse_window(a.amplitudes.size(), b.amplitudes.size(), off);
    g.spp = samples_per_slot;
    g.separation = a.separation;
    g.dt = a.separation / static_cast<double>(samples_per_slot);
    g.d_range = std::max({off.d1, off.d2, off.d1p, off.d2p}) -
                std::min({off.d1, off.d2, off.d1p, off.d2p});
    // The stretched lag window must never reach pulse pairs one slot over.
    if (2.0 * (det.resolve_time + g.d_range) + a.profile.half_support() +
            b.profile.half_support() >=
        a.separation)
        throw std::invalid_argument(
            "pulsed waveform route: resolve time plus offset spread too close to the pulse "
            "separation, neighbouring slots would register as coincidences");
    // Margin covers the causal detector spread plus the coincidence window reach.
    g.slot_pad = 2 + static_cast<std::ptrdiff_t>(std::ceil(2.0 * det.resolve_time / a.separation));
    g.n_samples = static_cast<std::size_t>(g.j_hi - g.j_lo + 2 * g.slot_pad) * g.spp;
    return g;
}

// Envelope of train #tr as seen by a detector arm with delay N*sep + d, carrier
// phase included: sum_j amps[j+N] * profile(t + d - j*sep) * exp(i*carrier*T).
std::vector<cdouble> offset_envelope(const PulseTrain& tr, long n_shift, double d, double carrier,
                                     const PulsedGrid& g) {
    std::vector<cdouble> env(g.n_samples, cdouble{0.0, 0.0});
    const double t0 = g.t_start();
    const double t_delay = static_cast<double>(n_shift) * g.separation + d;
    const cdouble phase = std::polar(1.0, -carrier * t_delay);
    const double half = tr.profile.half_support();
    const auto reach = static_cast<std::ptrdiff_t>(std::ceil(half / g.dt)) + 1;
    for (std::ptrdiff_t j = g.j_lo; j < g.j_hi; ++j) {
        const auto idx = static_cast<std::size_t>(j + n_shift);
        const cdouble amp = tr.amplitudes[idx] * phase;
        const double center = static_cast<double>(j) * g.separation - d;
        const auto m_center =
            static_cast<std::ptrdiff_t>(std::llround((center - t0) / g.dt - 0.5));
        const auto m_lo = std::max<std::ptrdiff_t>(0, m_center - reach);
        const auto m_hi =
            std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(g.n_samples), m_center + reach + 1);
        for (std::ptrdiff_t m = m_lo; m < m_hi; ++m) {
            const double t = t0 + (static_cast<double>(m) + 0.5) * g.dt;
            env[static_cast<std::size_t>(m)] += amp * tr.profile.value(t - center);
        }
    }
    return env;
}

// Causal box filter of width k samples, scaled so the filter integrates to
// det.charge: out[m] = (charge / T_R) * dt * sum_{u=m-k+1}^{m} in[u].
template <typename T>
std::vector<T> box_filter(const std::vector<T>& in, std::ptrdiff_t k, double gain_dt) {
    const auto n = static_cast<std::ptrdiff_t>(in.size());
    std::vector<T> prefix(static_cast<std::size_t>(n) + 1, T{});
    for (std::ptrdiff_t m = 0; m < n; ++m)
        prefix[static_cast<std::size_t>(m + 1)] = prefix[static_cast<std::size_t>(m)] + in[static_cast<std::size_t>(m)];
    std::vector<T> out(in.size(), T{});
    for (std::ptrdiff_t m = 0; m < n; ++m) {
        const auto lo = std::max<std::ptrdiff_t>(0, m - k + 1);
        out[static_cast<std::size_t>(m)] =
            (prefix[static_cast<std::size_t>(m + 1)] - prefix[static_cast<std::size_t>(lo)]) * gain_dt;
    }
    return out;
}

// Windowed coincidence integral (1/T) * sum_t dt * x[t] * conj(sum_{|tau|<=w} y[t+tau] * dt).
// The tau window spans the full discrete support of the response correlation
// (aligned pairs plus the sub-slot offset spread), so each same-slot pulse pair
// contributes its exact squared charge.
cdouble windowed_product(const std::vector<cdouble>& x, const std::vector<cdouble>& y,
                         std::ptrdiff_t w, double dt, double duration) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    std::vector<cdouble> prefix(static_cast<std::size_t>(n) + 1, cdouble{0.0, 0.0});
    for (std::ptrdiff_t m = 0; m < n; ++m)
        prefix[static_cast<std::size_t>(m + 1)] = prefix[static_cast<std::size_t>(m)] + y[static_cast<std::size_t>(m)];
    cdouble acc{0.0, 0.0};
    for (std::ptrdiff_t m = 0; m < n; ++m) {
        const auto lo = std::clamp<std::ptrdiff_t>(m - w, 0, n);
        const auto hi = std::clamp<std::ptrdiff_t>(m + w + 1, 0, n);
        const cdouble window = (prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo)]) * dt;
        acc += x[static_cast<std::size_t>(m)] * std::conj(window);
    }
    return acc * (dt / duration);
}

double windowed_product(const std::vector<double>& x, const std::vector<double>& y,
                        std::ptrdiff_t w, double dt, double duration) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    std::vector<double> prefix_y(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::ptrdiff_t m = 0; m < n; ++m)
        prefix_y[static_cast<std::size_t>(m + 1)] = prefix_y[static_cast<std::size_t>(m)] + y[static_cast<std::size_t>(m)];
    double acc = 0.0;
    for (std::ptrdiff_t m = 0; m < n; ++m) {
        const auto lo = std::clamp<std::ptrdiff_t>(m - w, 0, n);
        const auto hi = std::clamp<std::ptrdiff_t>(m + w + 1, 0, n);
        acc += x[static_cast<std::size_t>(m)] *
               (prefix_y[static_cast<std::size_t>(hi)] - prefix_y[static_cast<std::size_t>(lo)]) * dt;
    }
    return acc * (dt / duration);
}

std::vector<double> magnitudes_squared(const std::vector<cdouble>& v) {
    std::vector<double> out(v.size());
    kernels::active().mag_sq(v.data(), out.data(), v.size());
    return out;
}

} // namespace

PulsedCoincidence pulsed_coincidence_waveform(const PulseTrain& a, const PulseTrain& b,
                                              const PulseOffsets& off, const DetectorSpec& det,
                                              double carrier, std::size_t samples_per_slot) {
    validate(a);
    validate(b);
    const PulsedGrid g = make_grid(a, b, off, det, samples_per_slot);
    const auto k = std::max<std::ptrdiff_t>(1, std::llround(det.resolve_time / g.dt));
    const double t_r = static_cast<double>(k) * g.dt; // quantized resolve time
    const double gain = det.charge / t_r * g.dt;
    const auto w = g.lag_half_width(k);
    const double duration = static_cast<double>(g.j_hi - g.j_lo) * g.separation;

    const auto e1 = offset_envelope(a, off.n1, off.d1, carrier, g);
    const auto e1p = offset_envelope(a, off.n1p, off.d1p, carrier, g);
    const auto e2 = offset_envelope(b, off.n2, off.d2, carrier, g);
    const auto e2p = offset_envelope(b, off.n2p, off.d2p, carrier, g);

    const auto i1 = box_filter(magnitudes_squared(e1), k, gain);
    const auto i1p = box_filter(magnitudes_squared(e1p), k, gain);
    const auto i2 = box_filter(magnitudes_squared(e2), k, gain);
    const auto i2p = box_filter(magnitudes_squared(e2p), k, gain);

    // Cross currents for the interference brackets; carrier phases ride along in
    // the envelopes so these are already the full detector cross terms.
    std::vector<cdouble> z(g.n_samples), zp(g.n_samples);
    for (std::size_t m = 0; m < g.n_samples; ++m) {
        z[m] = std::conj(e1[m]) * e2[m];
        zp[m] = std::conj(e1p[m]) * e2p[m];
    }
    const auto u = box_filter(z, k, gain);
    const auto up = box_filter(zp, k, gain);

    PulsedCoincidence out;
    out.r11p = windowed_product(i1, i1p, w, g.dt, duration);
    out.r22p = windowed_product(i2, i2p, w, g.dt, duration);
    out.r12p = windowed_product(i1, i2p, w, g.dt, duration);
    out.r1p2 = windowed_product(i1p, i2, w, g.dt, duration);
    out.r1221 = 2.0 * std::real(windowed_product(u, up, w, g.dt, duration));
    // <u * u'> rather than <u * conj(u')>: conjugate the primed current first.
    std::vector<cdouble> up_conj(up.size());
    for (std::size_t m = 0; m < up.size(); ++m) up_conj[m] = std::conj(up[m]);
    out.r1212 = 2.0 * std::real(windowed_product(u, up_conj, w, g.dt, duration));
    out.rate = out.r11p + out.r22p + out.r12p + out.r1p2 - out.r1221 - out.r1212;
    return out;
}

double pulsed_coincidence_direct(const PulseTrain& a, const PulseTrain& b, const PulseOffsets& off,
                                 const DetectorSpec& det, double carrier,
                                 std::size_t samples_per_slot) {
    validate(a);
    validate(b);
    const PulsedGrid g = make_grid(a, b, off, det, samples_per_slot);
    const auto k = std::max<std::ptrdiff_t>(1, std::llround(det.resolve_time / g.dt));
    const double t_r = static_cast<double>(k) * g.dt;
    const double gain = det.charge / t_r * g.dt;
    const auto w = g.lag_half_width(k);
    const double duration = static_cast<double>(g.j_hi - g.j_lo) * g.separation;

    const auto e1 = offset_envelope(a, off.n1, off.d1, carrier, g);
    const auto e1p = offset_envelope(a, off.n1p, off.d1p, carrier, g);
    const auto e2 = offset_envelope(b, off.n2, off.d2, carrier, g);
    const auto e2p = offset_envelope(b, off.n2p, off.d2p, carrier, g);

    const double inv_sqrt2 = std::sqrt(0.5);
    std::vector<cdouble> v(g.n_samples), vp(g.n_samples);
    for (std::size_t m = 0; m < g.n_samples; ++m) {
        v[m] = (e1[m] + e2[m]) * inv_sqrt2;
        vp[m] = (e1p[m] - e2p[m]) * inv_sqrt2;
    }
    const auto iv = box_filter(magnitudes_squared(v), k, gain);
    const auto ivp = box_filter(magnitudes_squared(vp), k, gain);
    // Factor 4 rescales the physical mixer outputs to splitterless units.
    return 4.0 * windowed_product(iv, ivp, w, g.dt, duration);
}

} // namespace fourfold
