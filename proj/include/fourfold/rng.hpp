#pragma once

// Deterministic random streams. Every stochastic object in the library draws from a
// GaussianStream derived from (master_seed, stream_index, purpose), so results are
// reproducible bit-for-bit for a fixed master seed regardless of evaluation order
// or worker count. std::normal_distribution is deliberately avoided: its algorithm
// is implementation-defined, ours is not.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace fourfold {

// splitmix64: tiny, well-mixed seeding function (public-domain constants).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Mixes (master, stream, purpose) into one engine seed. purpose separates
// independent uses inside a single realization (noise vs. phases vs. amplitudes).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t purpose = 0) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s ^= stream + 0x9e3779b97f4a7c15ull;
    std::uint64_t b = splitmix64(s);
    s ^= purpose + 0xd1b54a32d192ed03ull;
    std::uint64_t c = splitmix64(s);
    return a ^ (b << 1) ^ (c >> 1);
}

class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    GaussianStream(std::uint64_t master, std::uint64_t stream, std::uint64_t purpose)
        : engine_(derive_seed(master, stream, purpose)) {}

    // Uniform in [0,1): 53-bit mantissa from the top bits of the engine output.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0,1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller. Caches the second variate.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double a = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Circular complex Gaussian with <|z|^2> = 1.
    std::complex<double> complex_normal() {
        const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
        const double re = normal();
        const double im = normal();
        return {re * inv_sqrt2, im * inv_sqrt2};
    }

    // Uniform phase in [0, 2pi).
    double phase() { return 2.0 * std::numbers::pi * uniform(); }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace fourfold
