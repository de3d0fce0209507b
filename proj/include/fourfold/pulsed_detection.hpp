#pragma once

// Coincidence estimation for pulse trains behind the two-splitter network.
//
// Two independent routes produce the same rate:
//  * amplitude route: averages the six fourth-order amplitude combinations over
//    the pulse index and weights the interference brackets with externally
//    supplied mode-overlap factors;
//  * waveform route: samples the trains onto a fine grid, applies the delays,
//    convolves intensities with a rectangular detector response of width T_R and
//    integrates the coincidence over the symmetric window tau in [-T_R, +T_R]
//    (that window carries the full detector-response correlation mass, so each
//    pulse pair contributes exactly Q^2).
//
// Both use the same valid pulse-index window, so for identical trains they agree
// up to grid discretization. Rates are reported in "splitterless" units (the
// physical 1/sqrt(2) mixer factors are compensated), matching the closed forms.

#include <cstdint>

#include "fourfold/detection.hpp"
#include "fourfold/pulse.hpp"

namespace fourfold {

// Delays decomposed as T = N*separation + d with |d| sub-slot.
struct PulseOffsets {
    long n1 = 0, n2 = 0, n1p = 0, n2p = 0;
    double d1 = 0.0, d2 = 0.0, d1p = 0.0, d2p = 0.0;

    double delta_d() const { return d2 - d1; }
    double delta_dp() const { return d2p - d1p; }
    double t1(double sep) const { return static_cast<double>(n1) * sep + d1; }
    double t2(double sep) const { return static_cast<double>(n2) * sep + d2; }
    double t1p(double sep) const { return static_cast<double>(n1p) * sep + d1p; }
    double t2p(double sep) const { return static_cast<double>(n2p) * sep + d2p; }
};

struct PulsedCoincidence {
    double rate = 0.0; // = r11p + r22p + r12p + r1p2 - r1221 - r1212, exactly
    double r11p = 0.0, r22p = 0.0, r12p = 0.0, r1p2 = 0.0; // baseline components
    double r1221 = 0.0, r1212 = 0.0; // interference brackets, incl. the +c.c.
};

// Mode overlap integral(conj(f)(t) g(t+offset) dt) by quadrature; |result| <= 1.
cdouble overlap_beta(const PulseProfile& f, const PulseProfile& g, double offset);

// Overlap factor for one detector's cross term, carrier phase included:
// overlap_beta(f, g, d2-d1) * exp(-i*carrier*(T2-T1)). Pass the primed d/N set for
// the primed detector.
cdouble detector_overlap_factor(const PulseProfile& f, const PulseProfile& g, double separation,
                                double carrier, long n_a, double d_a, long n_b, double d_b);

// <i> = Q * rep_rate * <|A_j|^2>.
double mean_photocurrent(const PulseTrain& train, const DetectorSpec& det);

// Pulse-index window [j_lo, j_hi) where all four offset indices are in range.
std::pair<std::ptrdiff_t, std::ptrdiff_t> valid_pulse_window(std::size_t n_a, std::size_t n_b,
                                                             const PulseOffsets& off);

PulsedCoincidence pulsed_coincidence_amplitude(const PulseTrain& a, const PulseTrain& b,
                                               const PulseOffsets& off, cdouble beta,
                                               cdouble beta_prime, const DetectorSpec& det);

// Requires T_R < separation (pulse-resolving detector) and clean sub-slot offsets
// (|d| <= separation/4).
PulsedCoincidence pulsed_coincidence_waveform(const PulseTrain& a, const PulseTrain& b,
                                              const PulseOffsets& off, const DetectorSpec& det,
                                              double carrier, std::size_t samples_per_slot = 512);

// End-to-end route: mixes the delayed waveforms through the physical splitter,
// detects both outputs, and integrates the windowed coincidence. Contains the
// phase-odd cross terms that only vanish in ensemble mean, so compare ensembles,
// not single realizations, against the other routes.
double pulsed_coincidence_direct(const PulseTrain& a, const PulseTrain& b, const PulseOffsets& off,
                                 const DetectorSpec& det, double carrier,
                                 std::size_t samples_per_slot = 512);

} // namespace fourfold
