#pragma once

// Pulse-train sources: normalized single-pulse profiles, per-pulse complex
// amplitudes, and fine-grid waveform assembly.

#include <cstdint>
#include <vector>

#include "fourfold/field.hpp"

namespace fourfold {

// Single-pulse envelope f(t), centered at t = 0, normalized so the intensity
// quadrature integral(|f|^2 dt) equals 1 (within 1e-9; exact for gaussian).
struct PulseProfile {
    enum class Shape { gaussian, user_sampled };

    Shape shape = Shape::gaussian;
    double width = 1.0; // gaussian 1/e half-width of |f| (duration scale), > 0

    // user_sampled: values on a uniform grid centered on t = 0, linearly
    // interpolated, zero outside.
    std::vector<cdouble> samples;
    double sample_dt = 0.0;

    static PulseProfile gaussian(double width);
    // Normalizes the samples on construction.
    static PulseProfile user(std::vector<cdouble> samples, double sample_dt);

    cdouble value(double t) const;
    double half_support() const; // beyond this |f| is treated as zero
    double norm_squared() const; // quadrature of |f|^2 on a fine grid

    // New profile sampled on step `dt`, renormalized. Normalization invariance
    // under resampling is a tested property.
    PulseProfile resampled(double dt) const;
};

// Throws std::invalid_argument if the profile is not normalized to 1e-9 or is
// degenerate (zero energy, non-positive width/step).
void validate(const PulseProfile& profile);

struct PulseTrain {
    std::vector<cdouble> amplitudes; // A_j, slot j centered at t = j*separation
    double separation = 1.0;         // slot pitch, > 0
    PulseProfile profile;
    double rep_rate = 1.0;           // always 1/separation
};

// Builds a train and enforces width <= separation/10 plus profile normalization.
PulseTrain make_pulse_train(std::vector<cdouble> amplitudes, double separation,
                            PulseProfile profile);

// Throws on violated invariants (rep_rate*separation == 1 within 1e-12, width
// bound, normalization, non-finite amplitudes).
void validate(const PulseTrain& train);

enum class AmplitudeStats { thermal, coherent };

// Random (thermal: i.i.d. circular Gaussian with <|A|^2> = mean_energy) or
// constant (coherent: sqrt(mean_energy)) amplitude train.
PulseTrain synth_pulse_train(std::size_t n_pulses, double separation, const PulseProfile& profile,
                             AmplitudeStats stats, double mean_energy, std::uint64_t seed);

// Samples V(t) = sum_j A_j f(t - j*separation) on a fine grid of `samples_per_slot`
// points per slot (midpoint convention); trace spans slot centers 0..n_pulses-1
// with half a slot of margin on each side. The carrier is attached as metadata.
FieldTrace build_pulse_waveform(const PulseTrain& train, std::size_t samples_per_slot,
                                double carrier);

} // namespace fourfold
