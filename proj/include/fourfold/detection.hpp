#pragma once

// Intensity correlation estimators for stationary traces.
//
// Estimates are lagged time averages <Ia(t) Ib(t+tau)> over the maximal common
// window for the whole lag grid (the largest |lag| margin is discarded for every
// lag, so all points share one window). Realizations combine through
// (sum, sum of squares, count) triples: the pooled standard error treats
// realizations as independent, which is what the synthesizer guarantees.

#include <cstddef>
#include <optional>
#include <vector>

#include "fourfold/field.hpp"

namespace fourfold {

struct DetectorSpec {
    double resolve_time = 0.0; // T_R, > 0 where used (slow/pulsed detection)
    // response shape: rectangular (the only supported kind)
    double charge = 1.0; // Q, integrated response, > 0
};

void validate(const DetectorSpec& spec);

// I(t) = |V(t)|^2 per sample.
std::vector<double> intensity(const FieldTrace& trace);

struct CorrelationEstimate {
    std::vector<double> tau_grid;
    std::vector<double> mean;
    std::vector<double> stderr_;
    std::size_t n_realizations = 0;
    std::size_t n_time_samples = 0; // per realization, after edge truncation
};

// Accumulates per-realization lagged products on a fixed tau grid.
class CorrelationAccumulator {
  public:
    CorrelationAccumulator(std::vector<double> tau_grid, double dt);

    // Ia, Ib must be time-aligned intensity arrays on the accumulator's grid.
    void add_realization(const std::vector<double>& ia, const std::vector<double>& ib);

    // Adds a realization's per-lag time averages directly (for externally
    // computed estimators that still want pooled errors).
    void add_point_values(const std::vector<double>& values);

    // Pooled result. With one realization the stderr falls back to the
    // within-trace spread using `decorrelation_time` to count effective samples
    // (duration / (2*T_dec)); without it the stderr is reported as zero.
    CorrelationEstimate finalize(std::optional<double> decorrelation_time = std::nullopt) const;

    std::size_t realizations() const { return count_; }

  private:
    std::vector<double> tau_grid_;
    std::vector<std::ptrdiff_t> lags_;
    double dt_;
    std::vector<double> sum_, sum_sq_;
    // single-realization fallback bookkeeping
    std::vector<double> first_within_var_;
    std::size_t count_ = 0;
    std::size_t window_ = 0;
};

// One-shot estimate from a single pair of intensity arrays.
CorrelationEstimate cross_correlate(const std::vector<double>& ia, const std::vector<double>& ib,
                                    double dt, const std::vector<double>& tau_grid);

// Slow-detector coincidence rate: mean of <Ia(t) Ib(t+tau)> over the one-sided
// window tau in [0, T_R] (inclusive grid endpoints). O(n) via running box sums.
double slow_detector_rate(const std::vector<double>& ia, const std::vector<double>& ib, double dt,
                          const DetectorSpec& spec);

// Mean and pooled-stderr helper for scalar per-realization statistics.
struct ScalarAccumulator {
    double sum = 0.0, sum_sq = 0.0;
    std::size_t n = 0;
    void add(double x) { sum += x; sum_sq += x * x; ++n; }
    double mean() const;
    double stderr_() const; // sample stddev / sqrt(n)
};

} // namespace fourfold
