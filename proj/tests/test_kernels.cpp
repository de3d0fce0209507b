#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "fourfold/kernels.hpp"

namespace kernels = fourfold::kernels;
using kernels::cdouble;

namespace {

// Sizes straddle the SIMD lane width and its remainders.
const std::vector<std::size_t> kSizes{0, 1, 2, 3, 4, 5, 7, 8, 9, 1000, 1003};

std::vector<cdouble> random_complex(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cdouble> out(n);
    for (auto& v : out) v = {g(rng), g(rng)};
    return out;
}

std::vector<double> random_real(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> out(n);
    for (auto& v : out) v = g(rng);
    return out;
}

void check_close(const std::vector<cdouble>& a, const std::vector<cdouble>& b, double tol) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a[i] - b[i]) <= tol * (1.0 + std::abs(a[i])));
    }
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar ops match their definitions") {
    const auto& k = kernels::scalar();
    const std::size_t n = 257;
    const auto x = random_complex(n, 11);
    const auto y = random_complex(n, 12);
    const auto s = random_real(n, 13);

    std::vector<double> mags(n);
    k.mag_sq(x.data(), mags.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(mags[i] == doctest::Approx(std::norm(x[i])).epsilon(1e-15));

    std::vector<cdouble> sum(n), diff(n);
    k.mix_split(x.data(), y.data(), sum.data(), diff.data(), n);
    const double c = std::sqrt(0.5);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(sum[i] - (x[i] + y[i]) * c) < 1e-14);
        CHECK(std::abs(diff[i] - (x[i] - y[i]) * c) < 1e-14);
        // the mixer is unitary sample by sample
        CHECK(std::norm(sum[i]) + std::norm(diff[i]) ==
              doctest::Approx(std::norm(x[i]) + std::norm(y[i])).epsilon(1e-12));
    }

    auto scaled = x;
    const cdouble f{0.3, -1.2};
    k.scale(scaled.data(), f, n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(scaled[i] - x[i] * f) < 1e-14);

    std::vector<cdouble> by_real(n);
    k.scale_by_real(x.data(), s.data(), by_real.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(by_real[i] - x[i] * s[i]) < 1e-14);

    long double dot_ref = 0.0L, sum_ref = 0.0L, sq_ref = 0.0L;
    std::complex<long double> cdot_ref{0.0L, 0.0L};
    for (std::size_t i = 0; i < n; ++i) {
        dot_ref += static_cast<long double>(s[i]) * mags[i];
        sum_ref += s[i];
        sq_ref += static_cast<long double>(s[i]) * s[i];
        cdot_ref += std::conj(std::complex<long double>(x[i])) * std::complex<long double>(y[i]);
    }
    CHECK(k.dot(s.data(), mags.data(), n) == doctest::Approx(static_cast<double>(dot_ref)).epsilon(1e-12));
    CHECK(k.sum(s.data(), n) == doctest::Approx(static_cast<double>(sum_ref)).epsilon(1e-12));
    CHECK(k.sum_sq(s.data(), n) == doctest::Approx(static_cast<double>(sq_ref)).epsilon(1e-12));
    CHECK(std::abs(k.cdot(x.data(), y.data(), n) - cdouble(cdot_ref)) < 1e-12 * (1.0 + std::abs(cdouble(cdot_ref))));
}

TEST_CASE("simd ops agree with scalar at every remainder size") {
    if (!kernels::avx2_available()) {
        MESSAGE("no avx2 on this host, equivalence checked elsewhere");
        return;
    }
    const auto& ks = kernels::scalar();
    const auto& kv = kernels::avx2();
    CHECK(std::string(kv.name) == "avx2");

    for (std::size_t n : kSizes) {
        CAPTURE(n);
        const auto x = random_complex(n, 100 + static_cast<unsigned>(n));
        const auto y = random_complex(n, 200 + static_cast<unsigned>(n));
        const auto s = random_real(n, 300 + static_cast<unsigned>(n));
        const auto t = random_real(n, 400 + static_cast<unsigned>(n));

        std::vector<double> ms(n), mv(n);
        ks.mag_sq(x.data(), ms.data(), n);
        kv.mag_sq(x.data(), mv.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(ms[i] == doctest::Approx(mv[i]).epsilon(1e-12));

        std::vector<cdouble> ss(n), ds(n), sv(n), dv(n);
        ks.mix_split(x.data(), y.data(), ss.data(), ds.data(), n);
        kv.mix_split(x.data(), y.data(), sv.data(), dv.data(), n);
        check_close(ss, sv, 1e-12);
        check_close(ds, dv, 1e-12);

        auto xs = x, xv = x;
        const cdouble f{-0.7, 0.4};
        ks.scale(xs.data(), f, n);
        kv.scale(xv.data(), f, n);
        check_close(xs, xv, 1e-12);

        std::vector<cdouble> rs(n), rv(n);
        ks.scale_by_real(x.data(), s.data(), rs.data(), n);
        kv.scale_by_real(x.data(), s.data(), rv.data(), n);
        check_close(rs, rv, 1e-12);

        // reductions may reassociate, hence the relative tolerance
        const double tol = 1e-9;
        CHECK(ks.dot(s.data(), t.data(), n) ==
              doctest::Approx(kv.dot(s.data(), t.data(), n)).epsilon(tol));
        CHECK(ks.sum(s.data(), n) == doctest::Approx(kv.sum(s.data(), n)).epsilon(tol));
        CHECK(ks.sum_sq(s.data(), n) == doctest::Approx(kv.sum_sq(s.data(), n)).epsilon(tol));
        const cdouble ca = ks.cdot(x.data(), y.data(), n);
        const cdouble cb = kv.cdot(x.data(), y.data(), n);
        CHECK(std::abs(ca - cb) <= tol * (1.0 + std::abs(ca)));
    }
}

TEST_CASE("active dispatch names a real implementation") {
    const std::string name = kernels::active().name;
    if (kernels::avx2_available()) {
        CHECK(name == "avx2");
    } else {
        CHECK(name == "scalar");
    }
}

} // TEST_SUITE
