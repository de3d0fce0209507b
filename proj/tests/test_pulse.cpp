#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "fourfold/detection.hpp"
#include "fourfold/pulse.hpp"
#include "fourfold/pulsed_detection.hpp"
#include "fourfold/rng.hpp"

using namespace fourfold;

TEST_SUITE("pulse") {

TEST_CASE("gaussian overlap matches the closed form") {
    const double w = 0.02;
    const auto p = PulseProfile::gaussian(w);
    for (double s : {0.0, 0.005, 0.01, 0.02, 0.04, 0.07}) {
        const cdouble beta = overlap_beta(p, p, s);
        const double want = std::exp(-s * s / (4.0 * w * w));
        CHECK(beta.real() == doctest::Approx(want).epsilon(1e-6));
        CHECK(std::abs(beta.imag()) < 1e-12);
        CHECK(std::abs(overlap_beta(p, p, -s) - beta) < 1e-12); // symmetric profiles commute
    }
}

TEST_CASE("overlap magnitude never exceeds one") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        PulseProfile f, h;
        if (trial % 3 == 0) {
            f = PulseProfile::gaussian(0.01 + u(rng));
            h = PulseProfile::gaussian(0.01 + u(rng));
        } else {
            // random smooth complex profiles, normalization handled inside user()
            const std::size_t n = 32 + static_cast<std::size_t>(u(rng) * 64);
            const double dt = 0.01 + 0.05 * u(rng);
            std::vector<cdouble> sf(n), sh(n);
            cdouble af{g(rng), g(rng)}, ah{g(rng), g(rng)};
            for (std::size_t i = 0; i < n; ++i) {
                af = 0.9 * af + 0.1 * cdouble{g(rng), g(rng)};
                ah = 0.9 * ah + 0.1 * cdouble{g(rng), g(rng)};
                sf[i] = af;
                sh[i] = ah;
            }
            f = PulseProfile::user(sf, dt);
            h = PulseProfile::user(sh, dt);
        }
        const double offset = 2.0 * (u(rng) - 0.5);
        CHECK(std::abs(overlap_beta(f, h, offset)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("detector overlap factor carries the slot carrier phase") {
    const auto p = PulseProfile::gaussian(0.02);
    const double sep = 1.0, carrier = 40.0;
    const cdouble beta = overlap_beta(p, p, 0.01);
    const cdouble full = detector_overlap_factor(p, p, sep, carrier, 2, 0.0, 3, 0.01);
    const cdouble want = beta * std::polar(1.0, -carrier * (sep + 0.01));
    CHECK(std::abs(full - want) < 1e-12);
}

TEST_CASE("resampling keeps the norm and the sampled values") {
    const auto p = PulseProfile::gaussian(0.05);
    const auto q = p.resampled(0.002);
    CHECK(q.norm_squared() == doctest::Approx(p.norm_squared()).epsilon(1e-6));
    for (double t : {-0.06, -0.01, 0.0, 0.02, 0.055}) {
        CHECK(std::abs(q.value(t) - p.value(t)) < 2e-3);
    }
}

TEST_CASE("thermal pulse trains have exponential energy statistics") {
    const double energy = 1.3;
    const auto train =
        synth_pulse_train(20000, 1.0, PulseProfile::gaussian(0.02), AmplitudeStats::thermal,
                          energy, 77);
    ScalarAccumulator e2, e4;
    for (const auto& a : train.amplitudes) {
        const double e = std::norm(a);
        e2.add(e);
        e4.add(e * e);
    }
    CHECK(std::abs(e2.mean() - energy) < 4.0 * e2.stderr_());
    // <E^2> = 2 <E>^2 for circular gaussian amplitudes
    CHECK(std::abs(e4.mean() - 2.0 * energy * energy) < 4.0 * e4.stderr_());
}

TEST_CASE("coherent pulse trains are flat") {
    const auto train = synth_pulse_train(128, 0.5, PulseProfile::gaussian(0.01),
                                         AmplitudeStats::coherent, 2.0, 5);
    CHECK(train.rep_rate == doctest::Approx(2.0));
    for (const auto& a : train.amplitudes) {
        CHECK(std::abs(a - cdouble{std::sqrt(2.0), 0.0}) < 1e-12);
    }
}

TEST_CASE("mean photocurrent integrates slot energy times charge and rate") {
    DetectorSpec det;
    det.charge = 0.7;
    const auto train = synth_pulse_train(256, 2.0, PulseProfile::gaussian(0.02),
                                         AmplitudeStats::coherent, 1.5, 1);
    CHECK(mean_photocurrent(train, det) == doctest::Approx(0.7 * 0.5 * 1.5).epsilon(1e-12));
}

TEST_CASE("waveform energy equals the summed slot energies") {
    const auto train = synth_pulse_train(64, 1.0, PulseProfile::gaussian(0.02),
                                         AmplitudeStats::thermal, 1.0, 3);
    const FieldTrace wf = build_pulse_waveform(train, 256, 0.0);
    double got = 0.0;
    for (const auto& s : wf.samples) got += std::norm(s) * wf.dt;
    double want = 0.0;
    for (const auto& a : train.amplitudes) want += std::norm(a);
    // the profile integrates to unit intensity, so the waveform carries E_j per slot
    CHECK(got == doctest::Approx(want).epsilon(1e-3));
}

} // TEST_SUITE
