#pragma once

// Stochastic field synthesis and second-order coherence estimation.

#include <cstdint>
#include <utility>
#include <vector>

#include "fourfold/field.hpp"

namespace fourfold {

// Zero-mean circular complex Gaussian (thermal) trace with <|V|^2> = I0 and
// envelope self-coherence following `model`. Spectral method: complex white noise
// shaped by the square root of the power spectrum (DFT of the periodized gamma),
// exact Gaussianity and exact target covariance up to periodization residue.
//
// Preconditions (throws std::invalid_argument):
//   dt <= Tc/20  (carrier-free envelope must resolve the coherence decay)
//   duration >= 100*Tc (enough decorrelation lengths for stable estimates)
FieldTrace synth_thermal(const CoherenceModel& model, double intensity, double duration, double dt,
                         std::uint64_t seed);

// Constant envelope sqrt(I0)*exp(i*phase); zero intensity variance by construction.
FieldTrace synth_coherent(double intensity, double phase, double duration, double dt,
                          double carrier = 0.0);

// 50/50 split of one origin trace: each output carries half the intensity; the
// second picks up a global random phase exp(i*phi) when requested (phi drawn once
// per call, i.e. constant within a realization).
std::pair<FieldTrace, FieldTrace> split_common_origin(const FieldTrace& origin, bool random_phase,
                                                      std::uint64_t seed);

// Pair of thermal traces with mutual (equal-time, normalized) coherence
// gamma_target: Vbar = gamma*V + sqrt(1-|gamma|^2)*V_independent, then scaled to
// intensity_b. Mutual coherence at lag tau is gamma_target * model envelope(tau).
// Requires |gamma_target| <= 1.
std::pair<FieldTrace, FieldTrace> make_partially_coherent_pair(const CoherenceModel& model,
                                                               double intensity_a, double intensity_b,
                                                               cdouble gamma_target, double duration,
                                                               double dt, std::uint64_t seed);

// Normalized cross-coherence estimate at the given lags (seconds, must sit on the
// sample grid). Per lag, numerator and both normalizers run over the same maximal
// overlap window, so |result| <= 1 holds exactly and the self-estimate at lag 0 is
// exactly 1.
std::vector<cdouble> estimate_gamma(const FieldTrace& a, const FieldTrace& b,
                                    const std::vector<double>& tau_grid);

// Lag in integer samples for a lag in seconds; throws if off-grid by > 1e-6 samples.
std::ptrdiff_t lag_to_samples(double tau, double dt);

} // namespace fourfold
