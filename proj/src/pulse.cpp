#include "fourfold/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fourfold/rng.hpp"

namespace fourfold {

namespace {

double gaussian_amp(double t, double width) {
    // (pi w^2)^(-1/4) exp(-t^2 / 2w^2): unit intensity integral, exactly.
    const double norm = std::pow(std::numbers::pi * width * width, -0.25);
    return norm * std::exp(-t * t / (2.0 * width * width));
}

} // namespace

PulseProfile PulseProfile::gaussian(double width) {
    if (!(width > 0.0)) {
        throw std::invalid_argument("PulseProfile::gaussian: width must be positive");
    }
    PulseProfile p;
    p.shape = Shape::gaussian;
    p.width = width;
    return p;
}

PulseProfile PulseProfile::user(std::vector<cdouble> samples, double sample_dt) {
    if (samples.size() < 4 || !(sample_dt > 0.0)) {
        throw std::invalid_argument("PulseProfile::user: need >= 4 samples and positive step");
    }
    PulseProfile p;
    p.shape = Shape::user_sampled;
    p.samples = std::move(samples);
    p.sample_dt = sample_dt;
    double e = 0.0;
    for (const cdouble& v : p.samples) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("PulseProfile::user: non-finite sample");
        }
        e += std::norm(v);
    }
    e *= sample_dt;
    if (!(e > 0.0)) {
        throw std::invalid_argument("PulseProfile::user: zero-energy profile");
    }
    const double scale = 1.0 / std::sqrt(e);
    for (cdouble& v : p.samples) v *= scale;
    // width: rms duration of |f|^2, used only for support/validation heuristics
    double t2 = 0.0;
    const double mid = 0.5 * static_cast<double>(p.samples.size() - 1);
    for (std::size_t i = 0; i < p.samples.size(); ++i) {
        const double t = (static_cast<double>(i) - mid) * sample_dt;
        t2 += std::norm(p.samples[i]) * t * t * sample_dt;
    }
    p.width = std::sqrt(std::max(t2, sample_dt * sample_dt));
    return p;
}

cdouble PulseProfile::value(double t) const {
    if (shape == Shape::gaussian) {
        return {gaussian_amp(t, width), 0.0};
    }
    const double mid = 0.5 * static_cast<double>(samples.size() - 1);
    const double x = t / sample_dt + mid;
    if (x <= 0.0 || x >= static_cast<double>(samples.size() - 1)) return {0.0, 0.0};
    const std::size_t i = static_cast<std::size_t>(x);
    const double frac = x - static_cast<double>(i);
    return samples[i] * (1.0 - frac) + samples[i + 1] * frac;
}

double PulseProfile::half_support() const {
    if (shape == Shape::gaussian) return 8.0 * width;
    return 0.5 * static_cast<double>(samples.size()) * sample_dt;
}

double PulseProfile::norm_squared() const {
    if (shape == Shape::gaussian) {
        // analytic normalization; quadrature below is for user shapes
        return 1.0;
    }
    double e = 0.0;
    for (const cdouble& v : samples) e += std::norm(v);
    return e * sample_dt;
}

PulseProfile PulseProfile::resampled(double dt) const {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("PulseProfile::resampled: step must be positive");
    }
    const double half = half_support();
    const std::size_t n = static_cast<std::size_t>(std::ceil(2.0 * half / dt)) + 1;
    std::vector<cdouble> vals(n);
    const double mid = 0.5 * static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        vals[i] = value((static_cast<double>(i) - mid) * dt);
    }
    return PulseProfile::user(std::move(vals), dt);
}

void validate(const PulseProfile& profile) {
    if (!(profile.width > 0.0)) {
        throw std::invalid_argument("PulseProfile: width must be positive");
    }
    if (profile.shape == PulseProfile::Shape::user_sampled) {
        if (profile.samples.size() < 4 || !(profile.sample_dt > 0.0)) {
            throw std::invalid_argument("PulseProfile: missing samples for user_sampled shape");
        }
        const double e = profile.norm_squared();
        if (std::abs(e - 1.0) > 1e-9) {
            throw std::invalid_argument("PulseProfile: not normalized, integral(|f|^2) = " +
                                        std::to_string(e));
        }
    }
}

PulseTrain make_pulse_train(std::vector<cdouble> amplitudes, double separation,
                            PulseProfile profile) {
    if (!(separation > 0.0)) {
        throw std::invalid_argument("make_pulse_train: separation must be positive");
    }
    PulseTrain train;
    train.amplitudes = std::move(amplitudes);
    train.separation = separation;
    train.profile = std::move(profile);
    train.rep_rate = 1.0 / separation;
    validate(train);
    return train;
}

void validate(const PulseTrain& train) {
    validate(train.profile);
    if (!(train.separation > 0.0)) {
        throw std::invalid_argument("PulseTrain: separation must be positive");
    }
    if (train.profile.width > train.separation / 10.0 * (1.0 + 1e-12)) {
        throw std::invalid_argument("PulseTrain: requires pulse width <= separation/10 (width = " +
                                    std::to_string(train.profile.width) + ", separation = " +
                                    std::to_string(train.separation) + ")");
    }
    if (std::abs(train.rep_rate * train.separation - 1.0) > 1e-12) {
        throw std::invalid_argument("PulseTrain: rep_rate must equal 1/separation");
    }
    for (const cdouble& a : train.amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("PulseTrain: non-finite amplitude");
        }
    }
}

PulseTrain synth_pulse_train(std::size_t n_pulses, double separation, const PulseProfile& profile,
                             AmplitudeStats stats, double mean_energy, std::uint64_t seed) {
    if (!(mean_energy > 0.0)) {
        throw std::invalid_argument("synth_pulse_train: mean_energy must be positive");
    }
    if (n_pulses == 0) {
        throw std::invalid_argument("synth_pulse_train: empty train");
    }
    std::vector<cdouble> amps(n_pulses);
    const double scale = std::sqrt(mean_energy);
    if (stats == AmplitudeStats::thermal) {
        GaussianStream rng(seed);
        for (cdouble& a : amps) a = scale * rng.complex_normal();
    } else {
        for (cdouble& a : amps) a = {scale, 0.0};
    }
    return make_pulse_train(std::move(amps), separation, profile);
}

FieldTrace build_pulse_waveform(const PulseTrain& train, std::size_t samples_per_slot,
                                double carrier) {
    validate(train);
    if (samples_per_slot < 16) {
        throw std::invalid_argument("build_pulse_waveform: need >= 16 samples per slot");
    }
    const double dt = train.separation / static_cast<double>(samples_per_slot);
    const std::size_t n_slots = train.amplitudes.size();
    const std::size_t n = n_slots * samples_per_slot;
    const double t0 = -0.5 * train.separation; // grid spans [t0, t0 + n_slots*separation)

    FieldTrace out;
    out.samples.assign(n, cdouble(0.0, 0.0));
    out.dt = dt;
    out.carrier = carrier;

    const double half = train.profile.half_support();
    const std::ptrdiff_t reach = static_cast<std::ptrdiff_t>(std::ceil(half / dt)) + 1;
    double energy = 0.0;
    for (std::size_t j = 0; j < n_slots; ++j) {
        const cdouble aj = train.amplitudes[j];
        energy += std::norm(aj);
        if (aj == cdouble(0.0, 0.0)) continue;
        const double center = static_cast<double>(j) * train.separation;
        // sample index nearest the pulse center (midpoint convention)
        const std::ptrdiff_t mc =
            static_cast<std::ptrdiff_t>(std::floor((center - t0) / dt - 0.5));
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, mc - reach);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n), mc + reach + 2);
        for (std::ptrdiff_t m = lo; m < hi; ++m) {
            const double t = t0 + (static_cast<double>(m) + 0.5) * dt;
            out.samples[static_cast<std::size_t>(m)] += aj * train.profile.value(t - center);
        }
    }
    out.mean_intensity_nominal =
        energy / static_cast<double>(n_slots) / train.separation; // mean power
    return out;
}

} // namespace fourfold
