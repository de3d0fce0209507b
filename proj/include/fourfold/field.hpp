#pragma once

// Core value types for sampled optical fields.
//
// Fields are stored as complex baseband envelopes on a uniform grid: the physical
// field is V(t) = samples[k] * exp(-i*carrier*t) at t = k*dt. Delaying by T shifts
// the envelope by the nearest integer number of samples and multiplies by the exact
// carrier phase exp(-i*carrier*T), so sub-sample interference phases are exact while
// envelope arguments are quantized to the grid.

#include <complex>
#include <cstdint>
#include <vector>

namespace fourfold {

using cdouble = std::complex<double>;

struct FieldTrace {
    std::vector<cdouble> samples;
    double dt = 0.0;                     // sample spacing, > 0
    double carrier = 0.0;                // optical angular frequency, >= 0
    double mean_intensity_nominal = 0.0; // ensemble-mean <|V|^2> the trace was built for

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) * dt; }
};

// Throws std::invalid_argument on non-finite samples, dt <= 0 or carrier < 0.
void validate(const FieldTrace& trace);

enum class CoherenceShape { gaussian, lorentzian };

// Normalized envelope self-coherence model gamma(tau). gamma(0) = 1, even, real.
//   gaussian:   exp(-tau^2 / (2 Tc^2))
//   lorentzian: exp(-|tau| / Tc)
struct CoherenceModel {
    CoherenceShape shape = CoherenceShape::gaussian;
    double tc = 1.0;    // coherence time, > 0
    double omega = 0.0; // carrier angular frequency, >= 0

    // Envelope coherence (no carrier factor).
    double envelope(double tau) const;

    // Full-field coherence gamma(tau) * exp(-i*omega*tau).
    cdouble full(double tau) const;

    // Full coherence with the envelope evaluated at a grid-quantized lag but the
    // carrier phase at the exact lag; mirrors how delay() treats traces.
    cdouble full_quantized(double tau, double dt) const;
};

// Throws std::invalid_argument when tc <= 0 or omega < 0.
void validate(const CoherenceModel& model);

enum class SourceKind { thermal, coherent, common_origin_split };

struct SourceSpec {
    SourceKind kind = SourceKind::thermal;
    double intensity = 1.0;   // I0 = <|V|^2>, > 0 (for common_origin_split: origin intensity)
    double alpha_phase = 0.0; // coherent only: fixed phase of the amplitude
    bool random_phase = false; // common_origin_split: random e^{i phi} on the second copy,
                               // redrawn each realization
};

void validate(const SourceSpec& spec);

} // namespace fourfold
