#include "fourfold/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fourfold {

namespace {

void check_intensity(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("oracle: ") + name + " must be finite and >= 0");
}

void check_gamma(cdouble g, const char* name) {
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
        throw std::invalid_argument(std::string("oracle: ") + name + " must be finite");
    if (std::abs(g) > 1.0 + 1e-6)
        throw std::invalid_argument(std::string("oracle: |") + name + "| exceeds 1");
}

void check_lambda(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("oracle: ") + name + " must be finite and >= 0");
}

} // namespace

double isserlis_fourth_moment(double mean_a, double mean_b, cdouble cross) {
    return mean_a * mean_b + std::norm(cross);
}

ScenarioPrediction make_prediction(double baseline, double amplitude, double phase) {
    ScenarioPrediction p;
    p.baseline = baseline;
    p.fringe_amplitude = amplitude;
    p.fringe_phase = phase;
    p.value = baseline - amplitude * std::cos(phase);
    p.visibility = baseline > 0.0 ? amplitude / baseline : 0.0;
    return p;
}

double thermal_lambda_from(cdouble gamma_self) {
    check_gamma(gamma_self, "gamma_self");
    return std::norm(gamma_self);
}

ScenarioPrediction predict_uncorrelated(double i1, double i2, cdouble gamma11, cdouble gamma22,
                                        double lambda1, double lambda2, double delta_phi) {
    check_intensity(i1, "i1");
    check_intensity(i2, "i2");
    check_gamma(gamma11, "gamma11");
    check_gamma(gamma22, "gamma22");
    check_lambda(lambda1, "lambda1");
    check_lambda(lambda2, "lambda2");
    const double baseline = i1 * i1 * (1.0 + lambda1) + i2 * i2 * (1.0 + lambda2) + 2.0 * i1 * i2;
    const double amplitude = 2.0 * i1 * i2 * std::abs(gamma11) * std::abs(gamma22);
    const double phase = std::arg(gamma11 * std::conj(gamma22)) + delta_phi;
    return make_prediction(baseline, amplitude, phase);
}

ScenarioPrediction predict_hom_mz(double i1, double i2, cdouble gamma11_at_dt1,
                                  cdouble gamma22_at_dt2, double lambda1, double lambda2,
                                  double delta_phi) {
    // Equal delay pairs are the special case of the independent-source form where
    // both coherences sit at the same lag tau.
    return predict_uncorrelated(i1, i2, gamma11_at_dt1, gamma22_at_dt2, lambda1, lambda2,
                                delta_phi);
}

AstronomyPrediction predict_astronomy(double i_a, double i_b, double ref1, double ref2,
                                      cdouble gamma_ab, double delta_phi_ref) {
    check_intensity(i_a, "i_a");
    check_intensity(i_b, "i_b");
    check_intensity(ref1, "ref1");
    check_intensity(ref2, "ref2");
    check_gamma(gamma_ab, "gamma_ab");
    AstronomyPrediction p;
    p.baseline = i_a * i_b * (1.0 + std::norm(gamma_ab)) + i_a * ref2 + i_b * ref1 + ref1 * ref2;
    p.fringe_amplitude = 2.0 * std::sqrt(ref1 * ref2 * i_a * i_b) * std::abs(gamma_ab);
    p.value = p.baseline + 2.0 * std::sqrt(ref1 * ref2 * i_a * i_b) *
                               std::real(gamma_ab * std::polar(1.0, -delta_phi_ref));
    const double ref_mix = i_a * ref2 + i_b * ref1;
    p.xi = ref_mix > 0.0 ? 2.0 * std::sqrt(ref1 * ref2 * i_a * i_b) / ref_mix : 0.0;
    p.visibility = p.baseline > 0.0 ? p.fringe_amplitude / p.baseline : 0.0;
    return p;
}

double astronomy_matched_visibility(double gamma_mag) {
    if (!(gamma_mag >= 0.0) || gamma_mag > 1.0 + 1e-6)
        throw std::invalid_argument("oracle: gamma_mag must be in [0, 1]");
    return 2.0 * gamma_mag / (4.0 + gamma_mag * gamma_mag);
}

ScenarioPrediction predict_scenario_i(double i1, double i2, cdouble gamma12_dt,
                                      cdouble gamma12_dtp, double delta_phi) {
    check_intensity(i1, "i1");
    check_intensity(i2, "i2");
    check_gamma(gamma12_dt, "gamma12_dt");
    check_gamma(gamma12_dtp, "gamma12_dtp");
    const double baseline = i1 * i1 + i2 * i2 + 2.0 * i1 * i2;
    const double amplitude = 2.0 * i1 * i2 * std::abs(gamma12_dt) * std::abs(gamma12_dtp);
    const double phase = std::arg(gamma12_dt * std::conj(gamma12_dtp)) + delta_phi;
    return make_prediction(baseline, amplitude, phase);
}

ScenarioPrediction predict_scenario_iii(double i1, double i2, cdouble gamma12_cross,
                                        cdouble gamma21_cross, double delta_phi,
                                        double lambda_cross_12, double lambda_cross_21) {
    check_intensity(i1, "i1");
    check_intensity(i2, "i2");
    check_gamma(gamma12_cross, "gamma12_cross");
    check_gamma(gamma21_cross, "gamma21_cross");
    check_lambda(lambda_cross_12, "lambda_cross_12");
    check_lambda(lambda_cross_21, "lambda_cross_21");
    const double baseline = i1 * i1 + i2 * i2 + 2.0 * i1 * i2 +
                            i1 * i2 * (lambda_cross_12 + lambda_cross_21);
    const double amplitude = 2.0 * i1 * i2 * std::abs(gamma12_cross) * std::abs(gamma21_cross);
    const double phase = std::arg(gamma12_cross * std::conj(gamma21_cross)) + delta_phi;
    return make_prediction(baseline, amplitude, phase);
}

ScenarioPrediction predict_scenario_iv(double i1, double i2, cdouble gamma12_dt,
                                       cdouble gamma12_dtp, double delta_phi) {
    // The long-window rate keeps exactly the lag-independent term, which is the
    // scenario_i fringe; finite-window leakage of the lag-dependent bunching
    // terms is a bias of order coherence_time / resolve_time, handled by the
    // caller's choice of resolve time.
    return predict_scenario_i(i1, i2, gamma12_dt, gamma12_dtp, delta_phi);
}

PulsedMoments PulsedMoments::independent_thermal(double ea, double eb, bool same_slot_a,
                                                 bool same_slot_b) {
    check_intensity(ea, "ea");
    check_intensity(eb, "eb");
    PulsedMoments m;
    m.m11p = same_slot_a ? 2.0 * ea * ea : ea * ea;
    m.m22p = same_slot_b ? 2.0 * eb * eb : eb * eb;
    m.m12p = ea * eb;
    m.m1p2 = ea * eb;
    m.m1221 = (same_slot_a && same_slot_b) ? cdouble{ea * eb, 0.0} : cdouble{0.0, 0.0};
    m.m1212 = {0.0, 0.0}; // circular amplitudes have no <A A> moment
    return m;
}

PulsedMoments PulsedMoments::independent_coherent(double ea, double eb, double delta_phase) {
    check_intensity(ea, "ea");
    check_intensity(eb, "eb");
    PulsedMoments m;
    m.m11p = ea * ea;
    m.m22p = eb * eb;
    m.m12p = ea * eb;
    m.m1p2 = ea * eb;
    m.m1221 = {ea * eb, 0.0};
    m.m1212 = std::polar(ea * eb, 2.0 * delta_phase);
    return m;
}

PulsedMoments PulsedMoments::independent_coherent_random_phase(double ea, double eb) {
    PulsedMoments m = independent_coherent(ea, eb, 0.0);
    m.m1212 = {0.0, 0.0}; // uniform phase averages the doubled-phase bracket away
    return m;
}

PulsedPrediction predict_pulsed(const PulsedMoments& m, cdouble beta, cdouble beta_prime) {
    check_gamma(beta, "beta");
    check_gamma(beta_prime, "beta_prime");
    PulsedPrediction p;
    p.baselines = m.m11p + m.m22p + m.m12p + m.m1p2;
    p.bracket_1221 = 2.0 * std::real(beta * std::conj(beta_prime) * m.m1221);
    p.bracket_1212 = 2.0 * std::real(beta * beta_prime * m.m1212);
    p.rate = p.baselines - p.bracket_1221 - p.bracket_1212;
    return p;
}

} // namespace fourfold
