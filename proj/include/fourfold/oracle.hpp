#pragma once

// Closed-form coincidence predictions for every supported network configuration.
// Each predictor takes already-evaluated complex coherence values (carrier phase
// included) so the caller controls how lags are quantized; none of them touch
// sampled data. Values are in splitterless units: the flat background for two
// identical thermal inputs is 4*I0^2.

#include <complex>
#include <optional>

#include "fourfold/field.hpp"
#include "fourfold/interferometer.hpp"

namespace fourfold {

// Gaussian fourth-order moment <|Va|^2 |Vb|^2> given the second-order moments:
// g11 = <|Va|^2> cross-normalized pieces are passed premultiplied; see call sites.
// For zero-mean jointly circular-Gaussian fields:
//   <Va* Vb* Vb Va> = <|Va|^2><|Vb|^2> + |<Va* Vb>|^2.
double isserlis_fourth_moment(double mean_a, double mean_b, cdouble cross);

struct ScenarioPrediction {
    double baseline = 0.0;        // fringe-free part
    double fringe_amplitude = 0.0; // coefficient of the oscillatory term, >= 0
    double fringe_phase = 0.0;     // phase at which the cosine is evaluated
    double value = 0.0;            // baseline - fringe_amplitude * cos(fringe_phase)
    double visibility = 0.0;       // fringe_amplitude / baseline
};

ScenarioPrediction make_prediction(double baseline, double amplitude, double phase);

// Excess-fluctuation factor of a thermal field: <I^2> = I^2 (1 + |gamma|^2).
double thermal_lambda_from(cdouble gamma_self);

// Two statistically independent sources; gamma11/gamma22 are each source's
// complex self-coherence evaluated at (detector delay difference + tau);
// lambda1/lambda2 are the self intensity-fluctuation factors at the same lags
// (|gamma|^2 for thermal, 0 for coherent).
ScenarioPrediction predict_uncorrelated(double i1, double i2, cdouble gamma11, cdouble gamma22,
                                        double lambda1, double lambda2, double delta_phi);

// Same layout, detector delay pairs equal on both arms: the unprimed/primed
// coherences coincide. Provided separately because this is the configuration
// whose background is exactly flat for identical thermal inputs.
ScenarioPrediction predict_hom_mz(double i1, double i2, cdouble gamma11_at_dt1,
                                  cdouble gamma22_at_dt2, double lambda1, double lambda2,
                                  double delta_phi);

// Star (thermal, intensities i_star/i_star_far treated via gamma) plus two
// independent reference beams of intensities ref1/ref2 with phase difference
// delta_phi_ref; gamma is the star's mutual coherence between the two stations
// at the detection lag.
struct AstronomyPrediction {
    double value = 0.0;
    double baseline = 0.0;
    double fringe_amplitude = 0.0;
    double xi = 0.0;         // fringe amplitude over the reference-dependent baseline part
    double visibility = 0.0; // fringe amplitude / full baseline
};

AstronomyPrediction predict_astronomy(double i_a, double i_b, double ref1, double ref2,
                                      cdouble gamma_ab, double delta_phi_ref);

// Visibility when each reference intensity equals the stellar intensity at its
// station (ref1 = i_a, ref2 = i_b): 2*g / (4 + g^2) with g = |gamma|.
double astronomy_matched_visibility(double gamma_mag);

// Common-origin split with a fresh random relative phase each realization.
// gamma12_dt / gamma12_dtp: mutual coherence at the two detector delay
// differences, carrier included.
ScenarioPrediction predict_scenario_i(double i1, double i2, cdouble gamma12_dt,
                                      cdouble gamma12_dtp, double delta_phi);

// Common-origin split, no random phase, crossed delay pairing. gamma12_cross is
// evaluated at (t2p - t1 + tau), gamma21_cross at (tau - (t2 - t1p)). The
// optional lambda terms add the thermal same-source bunching of the two crossed
// intensity products (pass |gamma|^2 values for a thermal origin, 0 for phase
// averaged or coherent variants).
ScenarioPrediction predict_scenario_iii(double i1, double i2, cdouble gamma12_cross,
                                        cdouble gamma21_cross, double delta_phi,
                                        double lambda_cross_12 = 0.0,
                                        double lambda_cross_21 = 0.0);

// Slow-detector rate for the common-origin random-phase split: fringes in tau
// wash out, what survives depends on the two delay differences only.
ScenarioPrediction predict_scenario_iv(double i1, double i2, cdouble gamma12_dt,
                                       cdouble gamma12_dtp, double delta_phi);

// ---- pulsed trains ----

// Second- and fourth-order amplitude moments entering the pulsed rate; all are
// averages over the pulse index at the relevant offsets.
struct PulsedMoments {
    double m11p = 0.0; // <|A_j|^2 |A_j'|^2>  (same-train, generally offset indices)
    double m22p = 0.0; // <|B_j|^2 |B_j'|^2>
    double m12p = 0.0; // <|A_j|^2><|B_j'|^2> cross products
    double m1p2 = 0.0;
    cdouble m1221{0.0, 0.0}; // <A_j* B_j B_j'* A_j'>-type bracket
    cdouble m1212{0.0, 0.0}; // <A_j* B_j A_j'* B_j'>-type bracket

    // Independent thermal trains, mean energies ea/eb, distinct slot indices on
    // the unprimed/primed picks (same_slot true when the detector pair lands on
    // one slot, which adds the bunching terms).
    static PulsedMoments independent_thermal(double ea, double eb, bool same_slot_a,
                                             bool same_slot_b);
    // Independent phase-stabilized trains with fixed relative phase delta:
    // brackets survive with |a|^2|b|^2 e^{+/- i delta} structure.
    static PulsedMoments independent_coherent(double ea, double eb, double delta_phase);
    // Coherent trains whose relative phase is uniformly random per realization.
    static PulsedMoments independent_coherent_random_phase(double ea, double eb);
};

struct PulsedPrediction {
    double rate = 0.0; // in units of Rp * Q^2
    double baselines = 0.0;
    double bracket_1221 = 0.0;
    double bracket_1212 = 0.0;
};

PulsedPrediction predict_pulsed(const PulsedMoments& m, cdouble beta, cdouble beta_prime);

} // namespace fourfold
