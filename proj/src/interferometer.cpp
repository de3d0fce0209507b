#include "fourfold/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fourfold/kernels.hpp"

namespace fourfold {

void validate(const DelayConfig& delays) {
    for (double t : {delays.t1, delays.t2, delays.t1p, delays.t2p}) {
        if (!std::isfinite(t)) throw std::invalid_argument("DelayConfig: non-finite delay");
    }
}

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::uncorrelated_sources: return "uncorrelated_sources";
        case ScenarioKind::astronomy: return "astronomy";
        case ScenarioKind::scenario_i: return "scenario_i";
        case ScenarioKind::scenario_ii: return "scenario_ii";
        case ScenarioKind::scenario_iii: return "scenario_iii";
        case ScenarioKind::scenario_iv: return "scenario_iv";
        case ScenarioKind::hom_mz: return "hom_mz";
        case ScenarioKind::pulsed: return "pulsed";
    }
    return "unknown";
}

ScenarioKind scenario_from_string(const std::string& name) {
    for (ScenarioKind k :
         {ScenarioKind::uncorrelated_sources, ScenarioKind::astronomy, ScenarioKind::scenario_i,
          ScenarioKind::scenario_ii, ScenarioKind::scenario_iii, ScenarioKind::scenario_iv,
          ScenarioKind::hom_mz, ScenarioKind::pulsed}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown scenario kind: " + name);
}

FieldTrace delay(const FieldTrace& input, double t_shift) {
    if (!(input.dt > 0.0)) throw std::invalid_argument("delay: trace has no grid");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(input.size());
    const std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(std::llround(t_shift / input.dt));
    if (std::abs(shift) >= n) {
        throw std::invalid_argument("delay: shift of " + std::to_string(shift) +
                                    " samples exceeds trace length " + std::to_string(n));
    }
    FieldTrace out;
    out.dt = input.dt;
    out.carrier = input.carrier;
    out.mean_intensity_nominal = input.mean_intensity_nominal;
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, shift);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n, n + shift);
    out.samples.assign(input.samples.begin() + lo, input.samples.begin() + hi);
    const cdouble phase = std::polar(1.0, -input.carrier * t_shift);
    kernels::active().scale(out.samples.data(), phase, out.samples.size());
    return out;
}

std::pair<FieldTrace, FieldTrace> beam_split(const FieldTrace& a, const FieldTrace& b) {
    if (a.size() != b.size()) throw std::invalid_argument("beam_split: length mismatch");
    if (a.dt != b.dt) throw std::invalid_argument("beam_split: dt mismatch");
    if (a.carrier != b.carrier) throw std::invalid_argument("beam_split: carrier mismatch");
    FieldTrace s, d;
    s.dt = d.dt = a.dt;
    s.carrier = d.carrier = a.carrier;
    s.samples.resize(a.size());
    d.samples.resize(a.size());
    kernels::active().mix_split(a.samples.data(), b.samples.data(), s.samples.data(),
                                d.samples.data(), a.size());
    const double mean = 0.5 * (a.mean_intensity_nominal + b.mean_intensity_nominal);
    s.mean_intensity_nominal = mean;
    d.mean_intensity_nominal = mean;
    return {std::move(s), std::move(d)};
}

namespace {

// Copies input advanced by `shift` samples into the common window [lo, hi) and
// applies the exact carrier phase for t_shift.
FieldTrace shifted_window(const FieldTrace& input, std::ptrdiff_t shift, double t_shift,
                          std::ptrdiff_t lo, std::ptrdiff_t hi) {
    FieldTrace out;
    out.dt = input.dt;
    out.carrier = input.carrier;
    out.mean_intensity_nominal = input.mean_intensity_nominal;
    out.samples.assign(input.samples.begin() + (lo + shift), input.samples.begin() + (hi + shift));
    kernels::active().scale(out.samples.data(), std::polar(1.0, -input.carrier * t_shift),
                            out.samples.size());
    return out;
}

} // namespace

AssembledScenario assemble_scenario(const FieldTrace& source1, const FieldTrace& source2,
                                    const DelayConfig& delays, double delta_phi) {
    validate(delays);
    if (!std::isfinite(delta_phi))
        throw std::invalid_argument("assemble_scenario: delta_phi must be finite");
    if (source1.size() != source2.size() || source1.dt != source2.dt) {
        throw std::invalid_argument("assemble_scenario: sources must share the sample grid");
    }
    if (source1.carrier != source2.carrier) {
        throw std::invalid_argument("assemble_scenario: sources must share the carrier");
    }
    const double dt = source1.dt;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(source1.size());
    const std::ptrdiff_t s1 = static_cast<std::ptrdiff_t>(std::llround(delays.t1 / dt));
    const std::ptrdiff_t s2 = static_cast<std::ptrdiff_t>(std::llround(delays.t2 / dt));
    const std::ptrdiff_t s1p = static_cast<std::ptrdiff_t>(std::llround(delays.t1p / dt));
    const std::ptrdiff_t s2p = static_cast<std::ptrdiff_t>(std::llround(delays.t2p / dt));

    const std::ptrdiff_t smin = std::min(std::min(s1, s2), std::min(s1p, s2p));
    const std::ptrdiff_t smax = std::max(std::max(s1, s2), std::max(s1p, s2p));
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -smin);
    const std::ptrdiff_t hi = std::min(n, n - smax);
    if (hi - lo < 64) {
        throw std::invalid_argument("assemble_scenario: delays leave fewer than 64 common samples");
    }

    FieldTrace v1 = shifted_window(source1, s1, delays.t1, lo, hi);
    FieldTrace v2 = shifted_window(source2, s2, delays.t2, lo, hi);
    if (delta_phi != 0.0) {
        kernels::active().scale(v2.samples.data(), std::polar(1.0, delta_phi), v2.samples.size());
    }
    FieldTrace v1p = shifted_window(source1, s1p, delays.t1p, lo, hi);
    FieldTrace v2p = shifted_window(source2, s2p, delays.t2p, lo, hi);

    auto [vsum, vdiff_unused] = beam_split(v1, v2);
    auto [vsum_unused, vdiff] = beam_split(v1p, v2p);

    AssembledScenario out;
    out.detector = std::move(vsum);
    out.detector_primed = std::move(vdiff);
    out.coincidence_scale = 4.0;
    return out;
}

AssembledScenario assemble_astronomy(const FieldTrace& stellar, const FieldTrace& stellar_copy,
                                     cdouble alpha1, cdouble alpha2) {
    if (stellar.size() != stellar_copy.size() || stellar.dt != stellar_copy.dt) {
        throw std::invalid_argument("assemble_astronomy: traces must share the sample grid");
    }
    AssembledScenario out;
    out.detector = stellar;
    out.detector_primed = stellar_copy;
    for (cdouble& v : out.detector.samples) v += alpha1;
    for (cdouble& v : out.detector_primed.samples) v += alpha2;
    out.detector.mean_intensity_nominal += std::norm(alpha1);
    out.detector_primed.mean_intensity_nominal += std::norm(alpha2);
    out.coincidence_scale = 1.0;
    return out;
}

namespace {

void warn_far(std::vector<std::string>& out, const char* label, double separation, double tc) {
    if (std::abs(separation) < 10.0 * tc) {
        out.push_back(std::string(label) + " = " + std::to_string(separation) +
                      " is not far against Tc (want |value| >= 10*Tc = " + std::to_string(10.0 * tc) +
                      ")");
    }
}

void warn_near(std::vector<std::string>& out, const char* label, double separation, double tc) {
    if (std::abs(separation) > 2.0 * tc) {
        out.push_back(std::string(label) + " = " + std::to_string(separation) +
                      " is not near against Tc (want |value| <= 2*Tc = " + std::to_string(2.0 * tc) +
                      ")");
    }
}

} // namespace

std::vector<std::string> regime_warnings(ScenarioKind kind, const DelayConfig& delays, double tc,
                                         double detector_resolve_time) {
    std::vector<std::string> out;
    switch (kind) {
        case ScenarioKind::scenario_i:
            // arms nearly balanced at each detector, primed pair far from unprimed
            warn_near(out, "t2 - t1", delays.delta_t(), tc);
            warn_near(out, "t2' - t1'", delays.delta_tp(), tc);
            warn_far(out, "t1' - t1", delays.delta_t1(), tc);
            warn_far(out, "t2' - t2", delays.delta_t2(), tc);
            break;
        case ScenarioKind::scenario_ii:
            warn_near(out, "t1' - t1", delays.delta_t1(), tc);
            warn_near(out, "t2' - t2", delays.delta_t2(), tc);
            warn_far(out, "t2 - t1", delays.delta_t(), tc);
            warn_far(out, "t2' - t1'", delays.delta_tp(), tc);
            break;
        case ScenarioKind::scenario_iii:
            warn_near(out, "t2' - t1", delays.delta_t1bar(), tc);
            warn_near(out, "t2 - t1'", delays.delta_t2bar(), tc);
            warn_far(out, "t2 - t1", delays.delta_t(), tc);
            warn_far(out, "t2' - t1'", delays.delta_tp(), tc);
            break;
        case ScenarioKind::scenario_iv:
            if (detector_resolve_time > 0.0 && detector_resolve_time < 10.0 * tc) {
                out.push_back("detector resolve time " + std::to_string(detector_resolve_time) +
                              " shorter than 10*Tc; the slow-detector average is not converged");
            }
            break;
        default:
            break;
    }
    return out;
}

} // namespace fourfold
