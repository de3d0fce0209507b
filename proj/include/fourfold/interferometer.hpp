#pragma once

// Delay lines and beam-splitter mixing. Detector fields follow
//   V (t) = [V1(t+T1)  + V2(t+T2) ] / sqrt(2)
//   V'(t) = [V1(t+T1') - V2(t+T2')] / sqrt(2)
// with physical normalization (|out1|^2 + |out2|^2 conserves energy per sample).
// Closed-form coincidence expressions in the oracle drop the two 1/sqrt(2)
// factors, so assembled scenarios carry coincidence_scale = 4 to convert measured
// <I I'> into those units (1 for the astronomy variant, which has no mixing
// splitter in front of the detectors).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fourfold/field.hpp"

namespace fourfold {

struct DelayConfig {
    double t1 = 0.0, t2 = 0.0, t1p = 0.0, t2p = 0.0;

    // Derived differences, recomputed on demand (never stored).
    double delta_t() const { return t2 - t1; }        // detector arm imbalance
    double delta_tp() const { return t2p - t1p; }     // primed arm imbalance
    double delta_t1() const { return t1p - t1; }      // per-source shift, source 1
    double delta_t2() const { return t2p - t2; }      // per-source shift, source 2
    double delta_t1bar() const { return t2p - t1; }   // cross pairing, unprimed 1
    double delta_t2bar() const { return t2 - t1p; }   // cross pairing, primed 1
};

void validate(const DelayConfig& delays);

enum class ScenarioKind {
    uncorrelated_sources,
    astronomy,
    scenario_i,
    scenario_ii,
    scenario_iii,
    scenario_iv,
    hom_mz,
    pulsed,
};

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_from_string(const std::string& name);

// V_out(t) = V_in(t + T): envelope shifted by the nearest integer sample count
// (|shift| must be smaller than the trace), carrier phase exp(-i*carrier*T) exact
// (the physical field is envelope * exp(-i*carrier*t)).
// The result is |shift| samples shorter, stored compactly: with T >= 0 sample k of
// the result is input sample k+shift; with T < 0 it is input sample k, standing
// for time (k+|shift|)*dt (the trailing |shift| input samples are dropped).
FieldTrace delay(const FieldTrace& input, double t_shift);

// 50/50 mixer: out1 = (a+b)/sqrt(2), out2 = (a-b)/sqrt(2). Traces must share
// length, dt and carrier.
std::pair<FieldTrace, FieldTrace> beam_split(const FieldTrace& a, const FieldTrace& b);

struct AssembledScenario {
    FieldTrace detector;        // V at the unprimed detector
    FieldTrace detector_primed; // V' (already time-aligned with `detector`)
    double coincidence_scale = 4.0; // multiply <I I'> to match splitterless units
};

// Applies the four delays on a common valid window and mixes. Sources must share
// grid and carrier. Throws if the shifts exhaust the traces. delta_phi is an
// extra fixed phase on source 2's path into the unprimed detector, the knob the
// closed forms call the constant phase difference.
AssembledScenario assemble_scenario(const FieldTrace& source1, const FieldTrace& source2,
                                    const DelayConfig& delays, double delta_phi = 0.0);

// Astronomy variant: detected fields are V + alpha1 and Vbar + alpha2 at relative
// detector lag handled downstream; no mixing splitter, coincidence_scale = 1.
AssembledScenario assemble_astronomy(const FieldTrace& stellar, const FieldTrace& stellar_copy,
                                     cdouble alpha1, cdouble alpha2);

// Human-readable regime notes: the closed forms assume "far" (>= 10*Tc) or "near"
// (<= 2*Tc) relations between delays; violations produce warnings, never errors.
std::vector<std::string> regime_warnings(ScenarioKind kind, const DelayConfig& delays, double tc,
                                         double detector_resolve_time = 0.0);

} // namespace fourfold
