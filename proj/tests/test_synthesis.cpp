#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "fourfold/detection.hpp"
#include "fourfold/interferometer.hpp"
#include "fourfold/rng.hpp"
#include "fourfold/synthesis.hpp"

using namespace fourfold;

namespace {

CoherenceModel model(double tc = 1.0, double omega = 50.0) {
    CoherenceModel m;
    m.tc = tc;
    m.omega = omega;
    return m;
}

} // namespace

TEST_SUITE("synthesis") {

TEST_CASE("thermal traces hit the nominal intensity and bunch by 2") {
    const auto m = model();
    const double i0 = 1.7;
    ScalarAccumulator mean_i, same_time;
    for (unsigned r = 0; r < 80; ++r) {
        const FieldTrace f = synth_thermal(m, i0, 400.0, 0.05, derive_seed(7, r));
        const auto ii = intensity(f);
        double a = 0.0, b = 0.0;
        for (double v : ii) {
            a += v;
            b += v * v;
        }
        const double n = static_cast<double>(ii.size());
        mean_i.add(a / n);
        same_time.add(b / n);
    }
    // gaussian statistics force <I^2> = 2 <I>^2 at zero lag
    CHECK(std::abs(mean_i.mean() - i0) < 4.0 * mean_i.stderr_());
    CHECK(std::abs(same_time.mean() - 2.0 * i0 * i0) < 4.0 * same_time.stderr_());
}

TEST_CASE("thermal autocorrelation follows the coherence envelope") {
    const auto m = model();
    const std::vector<double> taus{0.0, 0.3, 1.0, 2.0};
    std::vector<cdouble> acc(taus.size(), {0.0, 0.0});
    const unsigned reps = 60;
    for (unsigned r = 0; r < reps; ++r) {
        const FieldTrace f = synth_thermal(m, 1.0, 400.0, 0.05, derive_seed(21, r));
        const auto g = estimate_gamma(f, f, taus);
        for (std::size_t j = 0; j < taus.size(); ++j) acc[j] += g[j];
    }
    for (std::size_t j = 0; j < taus.size(); ++j) {
        const cdouble g = acc[j] / static_cast<double>(reps);
        CHECK(std::abs(g) == doctest::Approx(m.envelope(taus[j])).epsilon(0.04));
        // the stored samples are envelopes, so the estimate stays real-positive;
        // the imaginary part is pure estimator noise at every lag
        CHECK(g.real() > 0.5 * m.envelope(taus[j]));
        CHECK(std::abs(g.imag()) < 0.03);
    }
}

TEST_CASE("delaying a trace keeps samples and applies the exact carrier phase") {
    const auto m = model();
    const FieldTrace f = synth_thermal(m, 1.0, 400.0, 0.05, 99);
    const double t_shift = 0.25; // omega * t = 12.5 rad
    const FieldTrace d = delay(f, t_shift);
    // a positive shift trims the head, so the copy leads the original by 5 samples
    REQUIRE(d.size() == f.size() - 5);
    const auto g = estimate_gamma(f, d, {-t_shift});
    CHECK(std::abs(g[0]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::remainder(std::arg(g[0]) + m.omega * t_shift, 2.0 * std::acos(-1.0)) ==
          doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("coherent traces are constant phasors") {
    const FieldTrace f = synth_coherent(2.5, 0.8, 50.0, 0.05, 50.0);
    CHECK(f.carrier == 50.0);
    CHECK(f.mean_intensity_nominal == 2.5);
    const cdouble want = std::polar(std::sqrt(2.5), 0.8);
    for (const auto& s : f.samples) CHECK(std::abs(s - want) < 1e-12);
}

TEST_CASE("common origin split conserves energy sample by sample") {
    const auto m = model();
    const FieldTrace origin = synth_thermal(m, 2.0, 200.0, 0.05, 5);

    auto [p1, p2] = split_common_origin(origin, false, 1);
    REQUIRE(p1.size() == origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) {
        CHECK(std::norm(p1.samples[i]) + std::norm(p2.samples[i]) ==
              doctest::Approx(std::norm(origin.samples[i])).epsilon(1e-12));
        // without phase randomization the two copies are identical
        CHECK(std::abs(p1.samples[i] - p2.samples[i]) < 1e-14);
    }

    auto [q1, q2] = split_common_origin(origin, true, 1);
    cdouble ratio{0.0, 0.0};
    for (std::size_t i = 0; i < origin.size(); ++i) {
        CHECK(std::norm(q1.samples[i]) + std::norm(q2.samples[i]) ==
              doctest::Approx(std::norm(origin.samples[i])).epsilon(1e-12));
        if (std::abs(q1.samples[i]) > 1e-12) {
            const cdouble r = q2.samples[i] / q1.samples[i];
            if (std::abs(ratio) == 0.0) ratio = r;
            CHECK(std::abs(r - ratio) < 1e-12); // one global phase, not per-sample noise
        }
    }
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-12);
    auto [q1b, q2b] = split_common_origin(origin, true, 2);
    const cdouble ratio_b = q2b.samples[0] / q1b.samples[0];
    CHECK(std::abs(ratio - ratio_b) > 1e-3); // a different seed draws a different phase
}

TEST_CASE("partially coherent pair lands on the requested cross coherence") {
    const auto m = model();
    const cdouble target = std::polar(0.6, 0.7);
    cdouble acc{0.0, 0.0};
    ScalarAccumulator ia_acc, ib_acc;
    const unsigned reps = 150;
    for (unsigned r = 0; r < reps; ++r) {
        auto [a, b] = make_partially_coherent_pair(m, 1.0, 0.8, target, 300.0, 0.05,
                                                   derive_seed(31, r));
        acc += estimate_gamma(a, b, {0.0})[0];
        const auto iia = intensity(a);
        const auto iib = intensity(b);
        double sa = 0.0, sb = 0.0;
        for (double v : iia) sa += v;
        for (double v : iib) sb += v;
        ia_acc.add(sa / static_cast<double>(iia.size()));
        ib_acc.add(sb / static_cast<double>(iib.size()));
    }
    const cdouble g = acc / static_cast<double>(reps);
    CHECK(std::abs(g - target) < 0.03);
    CHECK(std::abs(ia_acc.mean() - 1.0) < 4.0 * ia_acc.stderr_());
    CHECK(std::abs(ib_acc.mean() - 0.8) < 4.0 * ib_acc.stderr_());
}

TEST_CASE("lag snapping accepts grid multiples and rejects the rest") {
    CHECK(lag_to_samples(0.25, 0.05) == 5);
    CHECK(lag_to_samples(-0.25, 0.05) == -5);
    CHECK(lag_to_samples(0.0, 0.05) == 0);
    CHECK_THROWS_AS(lag_to_samples(0.026, 0.05), std::invalid_argument);
}

TEST_CASE("synthesis is reproducible from the seed alone") {
    const auto m = model();
    const FieldTrace a = synth_thermal(m, 1.0, 150.0, 0.05, 1234);
    const FieldTrace b = synth_thermal(m, 1.0, 150.0, 0.05, 1234);
    const FieldTrace c = synth_thermal(m, 1.0, 150.0, 0.05, 1235);
    REQUIRE(a.size() == b.size());
    bool identical = true, differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.samples[i] != b.samples[i]) identical = false;
        if (a.samples[i] != c.samples[i]) differs = true;
    }
    CHECK(identical);
    CHECK(differs);
}

TEST_CASE("synthesis rejects grids that cannot resolve the envelope") {
    const auto m = model();
    CHECK_THROWS_AS(synth_thermal(m, 1.0, 200.0, 0.2, 1), std::invalid_argument);
    CHECK_THROWS_AS(synth_thermal(m, 1.0, 20.0, 0.05, 1), std::invalid_argument);
}

} // TEST_SUITE
