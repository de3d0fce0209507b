#include "fourfold/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "fourfold/detection.hpp"
#include "fourfold/interferometer.hpp"
#include "fourfold/kernels.hpp"
#include "fourfold/oracle.hpp"
#include "fourfold/pulse.hpp"
#include "fourfold/pulsed_detection.hpp"
#include "fourfold/rng.hpp"
#include "fourfold/synthesis.hpp"

namespace fourfold {

namespace {

// One (point, realization) estimate. The matrix of cells is indexed
// [point * n_realizations + realization]; every worker writes only its own
// realizations' slots and the reduction walks the matrix in a fixed order, so
// the result is bitwise identical for any worker count.
struct Cell {
    double coinc = 0.0;
    double det1 = 0.0;
    double det2 = 0.0;
};

double quantize(double t, double dt) {
    return static_cast<double>(std::llround(t / dt)) * dt;
}

// Coherence factor exactly as the sampled pipeline realizes it: envelope
// magnitude at the grid-quantized lag, carrier phase at the exact one (delay
// lines shift envelopes by whole samples but keep carrier phases exact).
cdouble gamma_mixed(double env_mag, double omega, double carrier_lag) {
    return std::polar(env_mag, -omega * carrier_lag);
}

double mean_of(const std::vector<double>& v) {
    return kernels::active().sum(v.data(), v.size()) / static_cast<double>(v.size());
}

// <ia(t) ib(t+lag)> over the maximal overlap window.
double lagged_mean(const std::vector<double>& ia, const std::vector<double>& ib,
                   std::ptrdiff_t lag) {
    const auto n = static_cast<std::ptrdiff_t>(ia.size());
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -lag);
    const std::ptrdiff_t hi = std::min(n, n - lag);
    if (hi - lo < 16)
        throw std::invalid_argument("run_sweep: correlation lag leaves fewer than 16 samples");
    const double acc = kernels::active().dot(ia.data() + lo, ib.data() + lo + lag,
                                             static_cast<std::size_t>(hi - lo));
    return acc / static_cast<double>(hi - lo);
}

// The swept variable folded into a concrete operating point.
struct PointSetting {
    DelayConfig delays;
    double tau = 0.0;
    double delta_phi_ref = 0.0;
    PulseOffsets offsets;
};

PointSetting setting_for(const Config& cfg, double x) {
    PointSetting s;
    s.delays = cfg.delays;
    s.tau = cfg.tau;
    if (cfg.astronomy) s.delta_phi_ref = cfg.astronomy->delta_phi_ref;
    if (cfg.pulsed) s.offsets = cfg.pulsed->offsets;
    const std::string& v = cfg.sweep.variable;
    if (v == "t1") {
        s.delays.t1 = x;
    } else if (v == "t2") {
        s.delays.t2 = x;
    } else if (v == "t1p") {
        s.delays.t1p = x;
    } else if (v == "t2p") {
        s.delays.t2p = x;
    } else if (v == "t2_both") {
        s.delays.t2 = x;
        s.delays.t2p = x;
    } else if (v == "tau") {
        s.tau = x;
    } else if (v == "delta_phi_ref") {
        s.delta_phi_ref = x;
    } else if (v == "pulse_delta_d_both") {
        s.offsets.d2 = x;
        s.offsets.d2p = x;
    } else {
        throw std::logic_error("run_sweep: unhandled sweep variable " + v);
    }
    return s;
}

// Envelope of one stationary source's self coherence. Coherent light has a
// constant envelope: unit envelope correlation at every lag and no intensity
// fluctuations.
struct EnvSide {
    bool thermal = true;
    const CoherenceModel* model = nullptr;

    double env(double lag) const { return thermal ? model->envelope(lag) : 1.0; }
    double lambda(double lag) const {
        const double e = env(lag);
        return thermal ? e * e : 0.0;
    }
};

struct StationaryView {
    double i1 = 0.0, i2 = 0.0;
    EnvSide side1, side2;
    const CoherenceModel* origin = nullptr; // common_origin_split only
};

StationaryView stationary_view(const Config& cfg) {
    StationaryView v;
    if (cfg.source_topology == "common_origin_split") {
        v.i1 = v.i2 = 0.5 * cfg.origin_intensity;
        v.origin = &*cfg.coherence;
        v.side1 = {true, v.origin};
        v.side2 = {true, v.origin};
    } else {
        v.i1 = cfg.source1.intensity;
        v.i2 = cfg.source2.intensity;
        v.side1 = {cfg.source1.kind == SourceKind::thermal, &*cfg.coherence};
        v.side2 = {cfg.source2.kind == SourceKind::thermal,
                   cfg.coherence_b ? &*cfg.coherence_b : &*cfg.coherence};
    }
    return v;
}

// Closed-form coincidence for one operating point, in splitterless units for
// the interferometer scenarios (the measured <I I'> is rescaled to match).
double analytic_coincidence(const Config& cfg, const PointSetting& s) {
    const double dt = cfg.ensemble.dt;
    if (cfg.scenario == ScenarioKind::astronomy) {
        const AstronomyConfig& a = *cfg.astronomy;
        // Everything is baseband here: the reference beams ride the same
        // carrier as the stellar field, so no carrier phase enters the lag.
        const cdouble gamma_ab = std::polar(a.gamma_mag, a.gamma_phase) *
                                 cfg.coherence->envelope(quantize(s.tau, dt));
        return predict_astronomy(a.intensity_a, a.intensity_b, a.ref1, a.ref2, gamma_ab,
                                 s.delta_phi_ref)
            .value;
    }
    if (cfg.scenario == ScenarioKind::pulsed) {
        const PulsedConfig& P = *cfg.pulsed;
        const PulseProfile prof = PulseProfile::gaussian(P.pulse_width);
        const PulseOffsets& off = s.offsets;
        const bool a_th = P.stats_a == AmplitudeStats::thermal;
        const bool b_th = P.stats_b == AmplitudeStats::thermal;
        // Slot pairings repeat the same amplitude draw only when the slot
        // indices coincide; the sub-slot offsets d never change the index.
        const bool same_a = off.n1 == off.n1p;
        const bool same_b = off.n2 == off.n2p;
        const double ea = P.energy_a, eb = P.energy_b;
        PulsedMoments m;
        m.m11p = (a_th && same_a) ? 2.0 * ea * ea : ea * ea;
        m.m22p = (b_th && same_b) ? 2.0 * eb * eb : eb * eb;
        m.m12p = ea * eb;
        m.m1p2 = ea * eb;
        const double sa = a_th ? (same_a ? ea : 0.0) : ea;
        const double sb = b_th ? (same_b ? eb : 0.0) : eb;
        m.m1221 = {sa * sb, 0.0};
        m.m1212 = (!a_th && !b_th && !P.random_relative_phase)
                      ? std::polar(ea * eb, 2.0 * P.relative_phase)
                      : cdouble{0.0, 0.0};
        const cdouble beta = detector_overlap_factor(prof, prof, P.separation, P.carrier, off.n1,
                                                     off.d1, off.n2, off.d2);
        const cdouble beta_prime = detector_overlap_factor(prof, prof, P.separation, P.carrier,
                                                           off.n1p, off.d1p, off.n2p, off.d2p);
        const double qrr = cfg.detector.charge * cfg.detector.charge / P.separation;
        return qrr * predict_pulsed(m, beta, beta_prime).rate;
    }

    const StationaryView v = stationary_view(cfg);
    const double omega = cfg.coherence->omega;
    const DelayConfig& d = s.delays;
    auto q = [dt](double t) { return quantize(t, dt); };
    const double tau_q = quantize(s.tau, dt);

    switch (cfg.scenario) {
        case ScenarioKind::uncorrelated_sources:
        case ScenarioKind::hom_mz: {
            const double lag1 = tau_q + q(d.t1p) - q(d.t1);
            const double lag2 = tau_q + q(d.t2p) - q(d.t2);
            const cdouble g11 = gamma_mixed(v.side1.env(lag1), omega, s.tau + d.delta_t1());
            const cdouble g22 = gamma_mixed(v.side2.env(lag2), omega, s.tau + d.delta_t2());
            return predict_uncorrelated(v.i1, v.i2, g11, g22, v.side1.lambda(lag1),
                                        v.side2.lambda(lag2), cfg.delta_phi)
                .value;
        }
        case ScenarioKind::scenario_i:
        case ScenarioKind::scenario_iv: {
            const cdouble gdt =
                gamma_mixed(v.origin->envelope(q(d.t2) - q(d.t1)), omega, d.delta_t());
            const cdouble gdtp =
                gamma_mixed(v.origin->envelope(q(d.t2p) - q(d.t1p)), omega, d.delta_tp());
            if (cfg.scenario == ScenarioKind::scenario_iv)
                return predict_scenario_iv(v.i1, v.i2, gdt, gdtp, cfg.delta_phi).value;
            return predict_scenario_i(v.i1, v.i2, gdt, gdtp, cfg.delta_phi).value;
        }
        case ScenarioKind::scenario_iii: {
            const double lag12 = tau_q + q(d.t2p) - q(d.t1);
            const double lag21 = q(d.t2) - q(d.t1p) - tau_q;
            const double e12 = v.origin->envelope(lag12);
            const double e21 = v.origin->envelope(lag21);
            const cdouble g12c = gamma_mixed(e12, omega, s.tau + d.delta_t1bar());
            // The second crossed factor enters the fringe unconjugated, so hand
            // the predictor its conjugate (it forms g12 * conj(g21) inside).
            const cdouble g21c = std::conj(gamma_mixed(e21, omega, d.delta_t2bar() - s.tau));
            return predict_scenario_iii(v.i1, v.i2, g12c, g21c, cfg.delta_phi, e12 * e12,
                                        e21 * e21)
                .value;
        }
        default:
            throw std::logic_error("run_sweep: no closed form for scenario " +
                                   to_string(cfg.scenario));
    }
}

// Mean photocurrents at the two detectors (physical units, splitter included).
std::pair<double, double> analytic_detectors(const Config& cfg, const PointSetting& s) {
    const double dt = cfg.ensemble.dt;
    if (cfg.scenario == ScenarioKind::astronomy) {
        const AstronomyConfig& a = *cfg.astronomy;
        return {a.intensity_a + a.ref1, a.intensity_b + a.ref2};
    }
    if (cfg.scenario == ScenarioKind::pulsed) {
        const PulsedConfig& P = *cfg.pulsed;
        const PulseProfile prof = PulseProfile::gaussian(P.pulse_width);
        const PulseOffsets& off = s.offsets;
        cdouble mu{0.0, 0.0}; // <conj(A) B> per slot, nonzero only for a fixed coherent pair
        if (P.stats_a == AmplitudeStats::coherent && P.stats_b == AmplitudeStats::coherent &&
            !P.random_relative_phase)
            mu = std::polar(std::sqrt(P.energy_a * P.energy_b), P.relative_phase);
        const cdouble beta_u = detector_overlap_factor(prof, prof, P.separation, P.carrier, off.n1,
                                                       off.d1, off.n2, off.d2);
        const cdouble beta_p = detector_overlap_factor(prof, prof, P.separation, P.carrier,
                                                       off.n1p, off.d1p, off.n2p, off.d2p);
        const double qrr = cfg.detector.charge / P.separation;
        const double base = 0.5 * (P.energy_a + P.energy_b);
        return {qrr * (base + std::real(beta_u * mu)), qrr * (base - std::real(beta_p * mu))};
    }
    const StationaryView v = stationary_view(cfg);
    const double base = 0.5 * (v.i1 + v.i2);
    const bool common = cfg.source_topology == "common_origin_split";
    cdouble mu_u{0.0, 0.0}, mu_p{0.0, 0.0};
    if (common && !cfg.random_phase) {
        // A phase-stable split keeps first-order coherence between the arms;
        // everything else (independent sources, randomized splits) averages
        // the single-field cross term to zero.
        const double omega = cfg.coherence->omega;
        const DelayConfig& d = s.delays;
        mu_u = gamma_mixed(v.origin->envelope(quantize(d.t2, dt) - quantize(d.t1, dt)), omega,
                           d.delta_t());
        mu_p = gamma_mixed(v.origin->envelope(quantize(d.t2p, dt) - quantize(d.t1p, dt)), omega,
                           d.delta_tp());
    }
    const double cross = std::sqrt(v.i1 * v.i2);
    return {base + cross * std::real(mu_u * std::polar(1.0, cfg.delta_phi)),
            base - cross * std::real(mu_p)};
}

void eval_stationary(const Config& cfg, const std::vector<PointSetting>& settings,
                     std::uint64_t seed_r, Cell* cell_r, std::size_t stride) {
    const double dur = cfg.ensemble.duration;
    const double dt = cfg.ensemble.dt;
    const CoherenceModel& model = *cfg.coherence;
    FieldTrace s1, s2;
    if (cfg.source_topology == "common_origin_split") {
        const FieldTrace origin =
            synth_thermal(model, cfg.origin_intensity, dur, dt, derive_seed(seed_r, 1));
        auto halves = split_common_origin(origin, cfg.random_phase, derive_seed(seed_r, 2));
        s1 = std::move(halves.first);
        s2 = std::move(halves.second);
    } else {
        s1 = cfg.source1.kind == SourceKind::thermal
                 ? synth_thermal(model, cfg.source1.intensity, dur, dt, derive_seed(seed_r, 1))
                 : synth_coherent(cfg.source1.intensity, cfg.source1.phase, dur, dt, model.omega);
        const CoherenceModel& mb = cfg.coherence_b ? *cfg.coherence_b : model;
        s2 = cfg.source2.kind == SourceKind::thermal
                 ? synth_thermal(mb, cfg.source2.intensity, dur, dt, derive_seed(seed_r, 2))
                 : synth_coherent(cfg.source2.intensity, cfg.source2.phase, dur, dt, mb.omega);
        if (cfg.random_phase) {
            GaussianStream rng(derive_seed(seed_r, 3));
            kernels::active().scale(s2.samples.data(), std::polar(1.0, rng.phase()),
                                    s2.samples.size());
        }
    }

    if (cfg.sweep.variable == "tau") {
        // Delays are fixed across the sweep: assemble once, slide the lag.
        const AssembledScenario a = assemble_scenario(s1, s2, cfg.delays, cfg.delta_phi);
        const std::vector<double> ia = intensity(a.detector);
        const std::vector<double> ib = intensity(a.detector_primed);
        const double m1 = mean_of(ia);
        const double m2 = mean_of(ib);
        for (std::size_t p = 0; p < settings.size(); ++p) {
            Cell& c = cell_r[p * stride];
            const auto lag = static_cast<std::ptrdiff_t>(std::llround(settings[p].tau / dt));
            c.coinc = lagged_mean(ia, ib, lag) * a.coincidence_scale;
            c.det1 = m1;
            c.det2 = m2;
        }
        return;
    }
    for (std::size_t p = 0; p < settings.size(); ++p) {
        const PointSetting& s = settings[p];
        const AssembledScenario a = assemble_scenario(s1, s2, s.delays, cfg.delta_phi);
        const std::vector<double> ia = intensity(a.detector);
        const std::vector<double> ib = intensity(a.detector_primed);
        Cell& c = cell_r[p * stride];
        if (cfg.scenario == ScenarioKind::scenario_iv) {
            c.coinc = slow_detector_rate(ia, ib, dt, cfg.detector) * a.coincidence_scale;
        } else {
            const auto lag = static_cast<std::ptrdiff_t>(std::llround(s.tau / dt));
            c.coinc = lagged_mean(ia, ib, lag) * a.coincidence_scale;
        }
        c.det1 = mean_of(ia);
        c.det2 = mean_of(ib);
    }
}

void eval_astronomy(const Config& cfg, const std::vector<PointSetting>& settings,
                    std::uint64_t seed_r, Cell* cell_r, std::size_t stride) {
    const AstronomyConfig& a = *cfg.astronomy;
    const double dt = cfg.ensemble.dt;
    auto pair = make_partially_coherent_pair(*cfg.coherence, a.intensity_a, a.intensity_b,
                                             std::polar(a.gamma_mag, a.gamma_phase),
                                             cfg.ensemble.duration, dt, derive_seed(seed_r, 1));
    const cdouble alpha1{std::sqrt(a.ref1), 0.0};
    if (cfg.sweep.variable == "tau") {
        const AssembledScenario asm_once = assemble_astronomy(
            pair.first, pair.second, alpha1, std::polar(std::sqrt(a.ref2), a.delta_phi_ref));
        const std::vector<double> ia = intensity(asm_once.detector);
        const std::vector<double> ib = intensity(asm_once.detector_primed);
        const double m1 = mean_of(ia);
        const double m2 = mean_of(ib);
        for (std::size_t p = 0; p < settings.size(); ++p) {
            Cell& c = cell_r[p * stride];
            const auto lag = static_cast<std::ptrdiff_t>(std::llround(settings[p].tau / dt));
            c.coinc = lagged_mean(ia, ib, lag) * asm_once.coincidence_scale;
            c.det1 = m1;
            c.det2 = m2;
        }
        return;
    }
    const auto lag = static_cast<std::ptrdiff_t>(std::llround(cfg.tau / dt));
    for (std::size_t p = 0; p < settings.size(); ++p) {
        const AssembledScenario asm_p =
            assemble_astronomy(pair.first, pair.second, alpha1,
                               std::polar(std::sqrt(a.ref2), settings[p].delta_phi_ref));
        const std::vector<double> ia = intensity(asm_p.detector);
        const std::vector<double> ib = intensity(asm_p.detector_primed);
        Cell& c = cell_r[p * stride];
        c.coinc = lagged_mean(ia, ib, lag) * asm_p.coincidence_scale;
        c.det1 = mean_of(ia);
        c.det2 = mean_of(ib);
    }
}

void eval_pulsed(const Config& cfg, const std::vector<PointSetting>& settings,
                 std::uint64_t seed_r, Cell* cell_r, std::size_t stride) {
    const PulsedConfig& P = *cfg.pulsed;
    const PulseProfile prof = PulseProfile::gaussian(P.pulse_width);
    PulseTrain a = synth_pulse_train(static_cast<std::size_t>(P.n_pulses), P.separation, prof,
                                     P.stats_a, P.energy_a, derive_seed(seed_r, 1));
    PulseTrain b = synth_pulse_train(static_cast<std::size_t>(P.n_pulses), P.separation, prof,
                                     P.stats_b, P.energy_b, derive_seed(seed_r, 2));
    double theta = P.relative_phase;
    if (P.random_relative_phase) theta += GaussianStream(derive_seed(seed_r, 3)).phase();
    if (theta != 0.0) {
        const cdouble rot = std::polar(1.0, theta);
        for (cdouble& amp : b.amplitudes) amp *= rot;
    }
    for (std::size_t p = 0; p < settings.size(); ++p) {
        const PulseOffsets& off = settings[p].offsets;
        Cell& c = cell_r[p * stride];
        c.coinc =
            pulsed_coincidence_direct(a, b, off, cfg.detector, P.carrier,
                                      static_cast<std::size_t>(P.samples_per_slot));
        // Detector means from the realized amplitudes over the same slot
        // window; the per-slot pulse integrals are exact, so this only skips
        // grid noise the coincidence estimate has to carry anyway.
        const auto [j_lo, j_hi] = valid_pulse_window(a.amplitudes.size(), b.amplitudes.size(), off);
        double iu = 0.0, ip = 0.0;
        cdouble cu{0.0, 0.0}, cp{0.0, 0.0};
        for (std::ptrdiff_t j = j_lo; j < j_hi; ++j) {
            const cdouble a1 = a.amplitudes[static_cast<std::size_t>(j + off.n1)];
            const cdouble a1p = a.amplitudes[static_cast<std::size_t>(j + off.n1p)];
            const cdouble b2 = b.amplitudes[static_cast<std::size_t>(j + off.n2)];
            const cdouble b2p = b.amplitudes[static_cast<std::size_t>(j + off.n2p)];
            iu += std::norm(a1) + std::norm(b2);
            ip += std::norm(a1p) + std::norm(b2p);
            cu += std::conj(a1) * b2;
            cp += std::conj(a1p) * b2p;
        }
        const cdouble beta_u = detector_overlap_factor(prof, prof, P.separation, P.carrier, off.n1,
                                                       off.d1, off.n2, off.d2);
        const cdouble beta_p = detector_overlap_factor(prof, prof, P.separation, P.carrier,
                                                       off.n1p, off.d1p, off.n2p, off.d2p);
        const double inv_win = 1.0 / static_cast<double>(j_hi - j_lo);
        const double qrr = cfg.detector.charge * a.rep_rate;
        c.det1 = 0.5 * qrr * (iu + 2.0 * std::real(beta_u * cu)) * inv_win;
        c.det2 = 0.5 * qrr * (ip - 2.0 * std::real(beta_p * cp)) * inv_win;
    }
}

} // namespace

SweepResult run_sweep(const Config& cfg, int workers) {
    const std::vector<double> grid = cfg.sweep.grid();
    const std::size_t n_points = grid.size();
    const auto n_real = static_cast<std::size_t>(cfg.ensemble.realizations);
    std::vector<PointSetting> settings;
    settings.reserve(n_points);
    for (double x : grid) settings.push_back(setting_for(cfg, x));

    std::vector<Cell> cells(n_points * n_real);
    const auto n_workers =
        static_cast<std::size_t>(std::clamp<long long>(workers, 1, static_cast<long long>(n_real)));

    const auto body = [&](std::size_t w) {
        for (std::size_t r = w; r < n_real; r += n_workers) {
            const std::uint64_t seed_r = derive_seed(cfg.ensemble.master_seed, r);
            Cell* row = cells.data() + r;
            if (cfg.scenario == ScenarioKind::pulsed) {
                eval_pulsed(cfg, settings, seed_r, row, n_real);
            } else if (cfg.scenario == ScenarioKind::astronomy) {
                eval_astronomy(cfg, settings, seed_r, row, n_real);
            } else {
                eval_stationary(cfg, settings, seed_r, row, n_real);
            }
        }
    };

    if (n_workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(n_workers);
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    body(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    SweepResult out;
    out.variable = cfg.sweep.variable;
    out.points.reserve(n_points);
    std::size_t n_within = 0;
    double max_z = 0.0;
    for (std::size_t p = 0; p < n_points; ++p) {
        SweepPoint pt;
        pt.x = grid[p];
        ScalarAccumulator c, d1, d2;
        for (std::size_t r = 0; r < n_real; ++r) {
            const Cell& cell = cells[p * n_real + r];
            c.add(cell.coinc);
            d1.add(cell.det1);
            d2.add(cell.det2);
        }
        pt.mc_mean = c.mean();
        pt.mc_stderr = c.stderr_();
        pt.det1_mean = d1.mean();
        pt.det1_stderr = d1.stderr_();
        pt.det2_mean = d2.mean();
        pt.det2_stderr = d2.stderr_();
        pt.analytic = analytic_coincidence(cfg, settings[p]);
        const auto det_pred = analytic_detectors(cfg, settings[p]);
        pt.det1_analytic = det_pred.first;
        pt.det2_analytic = det_pred.second;
        const double diff = pt.mc_mean - pt.analytic;
        const double scale = std::max(1.0, std::abs(pt.analytic));
        if (pt.mc_stderr > 1e-12 * scale) {
            pt.z = diff / pt.mc_stderr;
        } else {
            // Deterministic estimate (coherent light): agreement must hold to
            // rounding, there is no meaningful error bar to divide by.
            pt.z = std::abs(diff) <= 1e-9 * scale ? 0.0 : std::copysign(1e9, diff);
        }
        max_z = std::max(max_z, std::abs(pt.z));
        if (std::abs(pt.z) <= 3.0) ++n_within;
        out.points.push_back(pt);
    }
    out.max_abs_z = max_z;
    out.frac_within_3 =
        n_points > 0 ? static_cast<double>(n_within) / static_cast<double>(n_points) : 1.0;
    out.pass = out.max_abs_z <= cfg.thresholds.max_abs_z &&
               out.frac_within_3 >= cfg.thresholds.min_frac_within_3;

    if (cfg.scenario != ScenarioKind::pulsed && cfg.scenario != ScenarioKind::astronomy &&
        !settings.empty()) {
        for (const PointSetting* s : {&settings.front(), &settings.back()}) {
            for (std::string& w : regime_warnings(cfg.scenario, s->delays, cfg.coherence->tc,
                                                  cfg.detector.resolve_time)) {
                if (std::find(out.warnings.begin(), out.warnings.end(), w) == out.warnings.end())
                    out.warnings.push_back(std::move(w));
            }
        }
    }
    return out;
}

} // namespace fourfold
