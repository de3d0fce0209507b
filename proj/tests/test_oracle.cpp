#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "fourfold/field.hpp"
#include "fourfold/oracle.hpp"
#include "fourfold/rng.hpp"

using namespace fourfold;

TEST_SUITE("oracle") {

TEST_CASE("isserlis composes the gaussian fourth moment") {
    CHECK(isserlis_fourth_moment(1.0, 1.0, {0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(isserlis_fourth_moment(1.0, 1.0, {1.0, 0.0}) == doctest::Approx(2.0));
    CHECK(isserlis_fourth_moment(2.0, 0.5, {0.3, -0.4}) == doctest::Approx(1.0 + 0.25));

    // semantic check against sampled circular gaussian pairs
    std::mt19937_64 rng(20);
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    const cdouble corr{0.6, 0.3};
    const double resid = std::sqrt(1.0 - std::norm(corr));
    double m4 = 0.0, ma = 0.0, mb = 0.0;
    cdouble cross{0.0, 0.0};
    const int n = 400000;
    for (int i = 0; i < n; ++i) {
        const cdouble x{g(rng), g(rng)};
        const cdouble extra{g(rng), g(rng)};
        const cdouble y = std::conj(corr) * x + resid * extra;
        m4 += std::norm(x) * std::norm(y);
        ma += std::norm(x);
        mb += std::norm(y);
        cross += x * std::conj(y);
    }
    m4 /= n;
    ma /= n;
    mb /= n;
    cross /= static_cast<double>(n);
    CHECK(m4 == doctest::Approx(isserlis_fourth_moment(ma, mb, cross)).epsilon(0.02));
}

TEST_CASE("matched thermal pairs are flat at 4") {
    // the bunching excess exactly cancels the interference dip at every lag
    for (double env : {1.0, 0.7, 0.2, 0.0}) {
        const cdouble g{env, 0.0};
        const auto p = predict_uncorrelated(1.0, 1.0, g, g, env * env, env * env, 0.0);
        CHECK(p.value == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(p.baseline == doctest::Approx(4.0 + 2.0 * env * env).epsilon(1e-12));
    }
}

TEST_CASE("thermal against coherent dips to 3") {
    // coherent light carries no bunching, so the dip survives: 4 + e^2 - 2e
    const auto dip = predict_uncorrelated(1.0, 1.0, {1.0, 0.0}, {1.0, 0.0}, 1.0, 0.0, 0.0);
    CHECK(dip.value == doctest::Approx(3.0).epsilon(1e-12));
    const double env = 0.5;
    const auto part =
        predict_uncorrelated(1.0, 1.0, {env, 0.0}, {1.0, 0.0}, env * env, 0.0, 0.0);
    CHECK(part.value == doctest::Approx(4.0 + env * env - 2.0 * env).epsilon(1e-12));
}

TEST_CASE("the equal delay form is the same closed form") {
    const cdouble g1 = std::polar(0.8, 0.3), g2 = std::polar(0.6, -1.1);
    const auto a = predict_hom_mz(1.2, 0.9, g1, g2, 0.64, 0.36, 0.4);
    const auto b = predict_uncorrelated(1.2, 0.9, g1, g2, 0.64, 0.36, 0.4);
    CHECK(a.value == b.value);
    CHECK(a.baseline == b.baseline);
    CHECK(a.fringe_amplitude == b.fringe_amplitude);
}

TEST_CASE("far delay fringe rides on a flat baseline of 4") {
    // both self coherences die at the big offset, only cross pairings survive
    const double env = 0.9, omega_dt = 1.3;
    const cdouble gdt = std::polar(env, -omega_dt);
    const cdouble gdtp{0.0, 0.0}; // primed pair far detuned
    const auto p = predict_scenario_i(1.0, 1.0, gdt, gdtp, 0.0);
    CHECK(p.baseline == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(p.fringe_amplitude == doctest::Approx(0.0).epsilon(1e-12));
    // balanced limit: both pairings alive, visibility 1/2 at the matched point
    const auto balanced = predict_scenario_i(1.0, 1.0, {1.0, 0.0}, {1.0, 0.0}, 0.0);
    CHECK(balanced.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(balanced.visibility == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("slow detectors keep the far delay fringe") {
    const cdouble gdt = std::polar(0.8, 0.25);
    const cdouble gdtp = std::polar(0.8, 0.25);
    const auto fast = predict_scenario_i(1.0, 1.0, gdt, gdtp, 0.0);
    const auto slow = predict_scenario_iv(1.0, 1.0, gdt, gdtp, 0.0);
    CHECK(slow.value == doctest::Approx(fast.value).epsilon(1e-12));
    CHECK(slow.baseline == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("crossed delays add their bunching pedestals") {
    const cdouble g12 = std::polar(0.7, 0.9);
    const cdouble g21 = std::polar(0.5, -0.4);
    const double l12 = 0.49, l21 = 0.25;
    const auto p = predict_scenario_iii(1.0, 1.0, g12, g21, 0.0, l12, l21);
    CHECK(p.baseline == doctest::Approx(4.0 + l12 + l21).epsilon(1e-12));
    CHECK(p.fringe_amplitude == doctest::Approx(2.0 * 0.7 * 0.5).epsilon(1e-12));
    // fringe phase follows the product of both cross pairings
    CHECK(std::remainder(p.fringe_phase - std::arg(g12 * std::conj(g21)), 2.0 * std::acos(-1.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("astronomy visibility peaks at 2g over 4 plus g squared") {
    CHECK(astronomy_matched_visibility(1.0) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(astronomy_matched_visibility(0.5) ==
          doctest::Approx(0.23529411764705882).epsilon(1e-15));
    CHECK(astronomy_matched_visibility(0.0) == doctest::Approx(0.0));

    // the full prediction agrees with the matched shortcut
    for (double g : {1.0, 0.5, 0.25}) {
        const auto p = predict_astronomy(1.0, 1.0, 1.0, 1.0, {g, 0.0}, 0.0);
        CHECK(p.visibility == doctest::Approx(astronomy_matched_visibility(g)).epsilon(1e-12));
        // delta_phi_ref = 0 sits at the fringe crest
        CHECK(p.value == doctest::Approx(p.baseline + p.fringe_amplitude).epsilon(1e-12));
    }

    // mismatched references lower the contrast
    const auto weak = predict_astronomy(1.0, 1.0, 0.2, 0.2, {1.0, 0.0}, 0.0);
    CHECK(weak.visibility < 0.4);
}

TEST_CASE("pulsed moments compose the coincidence rate") {
    const auto thermal = PulsedMoments::independent_thermal(1.0, 1.0, true, true);
    CHECK(thermal.m11p == doctest::Approx(2.0));
    CHECK(thermal.m22p == doctest::Approx(2.0));
    CHECK(thermal.m1221.real() == doctest::Approx(1.0));
    CHECK(thermal.m1212 == cdouble{0.0, 0.0});
    for (double b : {1.0, 0.8, 0.3, 0.0}) {
        const auto p = predict_pulsed(thermal, {b, 0.0}, {b, 0.0});
        CHECK(p.rate == doctest::Approx(6.0 - 2.0 * b * b).epsilon(1e-12));
    }

    const auto offset_slots = PulsedMoments::independent_thermal(1.0, 1.0, false, false);
    CHECK(predict_pulsed(offset_slots, {1.0, 0.0}, {1.0, 0.0}).rate == doctest::Approx(4.0));

    // scaling: both energies a^2 multiply every term by a^4
    const double a2 = 1.7;
    const auto scaled = PulsedMoments::independent_thermal(a2, a2, true, true);
    CHECK(predict_pulsed(scaled, {1.0, 0.0}, {1.0, 0.0}).rate ==
          doctest::Approx(4.0 * a2 * a2).epsilon(1e-12));

    const auto fixed = PulsedMoments::independent_coherent(1.0, 1.0, 0.0);
    CHECK(predict_pulsed(fixed, {1.0, 0.0}, {1.0, 0.0}).rate == doctest::Approx(0.0));
    const auto randomized = PulsedMoments::independent_coherent_random_phase(1.0, 1.0);
    CHECK(predict_pulsed(randomized, {1.0, 0.0}, {1.0, 0.0}).rate == doctest::Approx(2.0));
}

TEST_CASE("predictions stay physical over random inputs") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double i1 = 0.1 + 2.0 * u(rng);
        const double i2 = 0.1 + 2.0 * u(rng);
        const double e1 = u(rng), e2 = u(rng);
        const double ph1 = 6.28 * u(rng), ph2 = 6.28 * u(rng), dphi = 6.28 * u(rng);
        const bool thermal1 = u(rng) < 0.5, thermal2 = u(rng) < 0.5;
        const auto p = predict_uncorrelated(i1, i2, std::polar(e1, ph1), std::polar(e2, ph2),
                                            thermal1 ? e1 * e1 : 0.0, thermal2 ? e2 * e2 : 0.0,
                                            dphi);
        CHECK(p.value >= 0.0);
        CHECK(p.visibility <= 1.0 + 1e-12);
        CHECK(p.fringe_amplitude >= 0.0);
        CHECK(p.value ==
              doctest::Approx(p.baseline - p.fringe_amplitude * std::cos(p.fringe_phase))
                  .epsilon(1e-12));

        const auto q = predict_scenario_iii(i1, i2, std::polar(e1, ph1), std::polar(e2, ph2),
                                            dphi, e1 * e1, e2 * e2);
        CHECK(q.value >= 0.0);
        CHECK(q.visibility <= 1.0 + 1e-12);
    }
}

TEST_CASE("pulsed rates stay physical over random moments") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double ea = 0.1 + 2.0 * u(rng), eb = 0.1 + 2.0 * u(rng);
        const cdouble beta = std::polar(u(rng), 6.28 * u(rng));
        const cdouble beta_p = std::polar(u(rng), 6.28 * u(rng));
        const bool sa = u(rng) < 0.5, sb = u(rng) < 0.5;
        const auto m = PulsedMoments::independent_thermal(ea, eb, sa, sb);
        CHECK(predict_pulsed(m, beta, beta_p).rate >= -1e-12);
        const auto c = PulsedMoments::independent_coherent(ea, eb, 6.28 * u(rng));
        CHECK(predict_pulsed(c, beta, beta_p).rate >= -1e-12);
    }
}

} // TEST_SUITE
