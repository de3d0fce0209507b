#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fourfold/detection.hpp"
#include "fourfold/rng.hpp"
#include "fourfold/synthesis.hpp"

using namespace fourfold;

namespace {

std::vector<double> random_intensity(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> out(n);
    for (auto& v : out) v = expo(rng);
    return out;
}

// reference estimator: common overlap window across the whole lag grid
std::vector<double> naive_cross(const std::vector<double>& ia, const std::vector<double>& ib,
                                double dt, const std::vector<double>& taus) {
    std::vector<std::ptrdiff_t> lags;
    for (double t : taus) lags.push_back(lag_to_samples(t, dt));
    const auto [mn, mx] = std::minmax_element(lags.begin(), lags.end());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(ia.size());
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -*mn);
    const std::ptrdiff_t hi = n - std::max<std::ptrdiff_t>(0, *mx);
    std::vector<double> out;
    for (std::ptrdiff_t lag : lags) {
        double s = 0.0;
        for (std::ptrdiff_t t = lo; t < hi; ++t) s += ia[t] * ib[t + lag];
        out.push_back(s / static_cast<double>(hi - lo));
    }
    return out;
}

} // namespace

TEST_SUITE("detection") {

TEST_CASE("cross correlation matches the naive double loop") {
    const double dt = 0.05;
    const std::vector<double> taus{-0.5, -0.05, 0.0, 0.1, 0.75};
    const auto ia = random_intensity(4000, 1);
    const auto ib = random_intensity(4000, 2);
    const auto est = cross_correlate(ia, ib, dt, taus);
    const auto ref = naive_cross(ia, ib, dt, taus);
    REQUIRE(est.mean.size() == ref.size());
    for (std::size_t j = 0; j < ref.size(); ++j) {
        CHECK(est.mean[j] == doctest::Approx(ref[j]).epsilon(1e-12));
    }
    CHECK(est.n_realizations == 1);
    CHECK(est.n_time_samples == 4000 - 10 - 15); // 10 head for lag -0.5, 15 tail for 0.75
}

TEST_CASE("thermal self correlation is consistent with its own error bars") {
    CoherenceModel m;
    m.tc = 1.0;
    m.omega = 0.0;
    const std::vector<double> taus{0.0, 0.5, 3.0};
    CorrelationAccumulator acc(taus, 0.05);
    for (unsigned r = 0; r < 64; ++r) {
        const auto f = synth_thermal(m, 1.0, 300.0, 0.05, derive_seed(3, r));
        const auto ii = intensity(f);
        acc.add_realization(ii, ii);
    }
    const auto est = acc.finalize();
    for (std::size_t j = 0; j < taus.size(); ++j) {
        const double env = m.envelope(taus[j]);
        const double want = 1.0 + env * env;
        CHECK(std::abs(est.mean[j] - want) < 4.0 * est.stderr_[j]);
    }
}

TEST_CASE("error bars shrink like one over sqrt of realizations") {
    CoherenceModel m;
    m.tc = 1.0;
    m.omega = 0.0;
    const std::vector<double> taus{0.0};
    CorrelationAccumulator small(taus, 0.05), big(taus, 0.05);
    for (unsigned r = 0; r < 400; ++r) {
        const auto f = synth_thermal(m, 1.0, 150.0, 0.05, derive_seed(9, r));
        const auto ii = intensity(f);
        if (r < 100) small.add_realization(ii, ii);
        big.add_realization(ii, ii);
    }
    const double ratio = small.finalize().stderr_[0] / big.finalize().stderr_[0];
    CHECK(ratio == doctest::Approx(2.0).epsilon(0.35));
}

TEST_CASE("single realization error bars need a decorrelation time") {
    const auto ia = random_intensity(2000, 4);
    CorrelationAccumulator acc({0.0}, 0.05);
    acc.add_realization(ia, ia);
    CHECK(acc.finalize().stderr_[0] == 0.0);
    CHECK(acc.finalize(1.0).stderr_[0] > 0.0);
}

TEST_CASE("accumulation is deterministic") {
    CoherenceModel m;
    m.tc = 1.0;
    m.omega = 0.0;
    auto run = [&] {
        CorrelationAccumulator acc({0.0, 1.0}, 0.05);
        for (unsigned r = 0; r < 8; ++r) {
            const auto f = synth_thermal(m, 1.0, 150.0, 0.05, derive_seed(11, r));
            const auto ii = intensity(f);
            acc.add_realization(ii, ii);
        }
        return acc.finalize();
    };
    const auto a = run();
    const auto b = run();
    for (std::size_t j = 0; j < a.mean.size(); ++j) {
        CHECK(a.mean[j] == b.mean[j]);
        CHECK(a.stderr_[j] == b.stderr_[j]);
    }
}

TEST_CASE("slow detector rate matches the naive double sum") {
    const double dt = 0.1;
    DetectorSpec det;
    det.resolve_time = 1.5; // 15 lags
    const auto ia = random_intensity(500, 6);
    const auto ib = random_intensity(500, 7);
    const double got = slow_detector_rate(ia, ib, dt, det);
    const std::size_t k = 15;
    double want = 0.0;
    for (std::size_t t = 0; t + k < ia.size(); ++t) {
        for (std::size_t u = 0; u <= k; ++u) want += ia[t] * ib[t + u];
    }
    want /= static_cast<double>(k + 1) * static_cast<double>(ia.size() - k);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("slow detector rejects windows longer than the trace") {
    DetectorSpec det;
    det.resolve_time = 10.0;
    const auto ia = random_intensity(64, 8);
    CHECK_THROWS_AS(slow_detector_rate(ia, ia, 0.1, det), std::invalid_argument);
}

TEST_CASE("scalar accumulator reports mean and standard error") {
    ScalarAccumulator acc;
    for (double v : {1.0, 2.0, 3.0, 4.0}) acc.add(v);
    CHECK(acc.mean() == doctest::Approx(2.5));
    // sample variance 5/3, stderr sqrt(5/12)
    CHECK(acc.stderr_() == doctest::Approx(std::sqrt(5.0 / 12.0)).epsilon(1e-12));
    ScalarAccumulator one;
    one.add(7.0);
    CHECK(one.mean() == doctest::Approx(7.0));
    CHECK(one.stderr_() == 0.0);
}

} // TEST_SUITE
