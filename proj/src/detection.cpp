#include "fourfold/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fourfold/kernels.hpp"
#include "fourfold/synthesis.hpp"

namespace fourfold {

void validate(const DetectorSpec& spec) {
    if (!(spec.charge > 0.0)) {
        throw std::invalid_argument("DetectorSpec: charge must be positive");
    }
    if (spec.resolve_time < 0.0 || !std::isfinite(spec.resolve_time)) {
        throw std::invalid_argument("DetectorSpec: resolve_time must be finite and >= 0");
    }
}

std::vector<double> intensity(const FieldTrace& trace) {
    std::vector<double> out(trace.size());
    kernels::active().mag_sq(trace.samples.data(), out.data(), out.size());
    return out;
}

CorrelationAccumulator::CorrelationAccumulator(std::vector<double> tau_grid, double dt)
    : tau_grid_(std::move(tau_grid)), dt_(dt) {
    if (tau_grid_.empty()) throw std::invalid_argument("CorrelationAccumulator: empty tau grid");
    lags_.reserve(tau_grid_.size());
    for (double tau : tau_grid_) lags_.push_back(lag_to_samples(tau, dt_));
    sum_.assign(tau_grid_.size(), 0.0);
    sum_sq_.assign(tau_grid_.size(), 0.0);
}

void CorrelationAccumulator::add_realization(const std::vector<double>& ia,
                                             const std::vector<double>& ib) {
    if (ia.size() != ib.size()) {
        throw std::invalid_argument("CorrelationAccumulator: intensity arrays differ in length");
    }
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(ia.size());
    const auto [mn, mx] = std::minmax_element(lags_.begin(), lags_.end());
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -*mn);
    const std::ptrdiff_t hi = n - std::max<std::ptrdiff_t>(0, *mx);
    if (hi - lo < 16) {
        throw std::invalid_argument("CorrelationAccumulator: trace too short for the lag grid (" +
                                    std::to_string(hi - lo) + " usable samples)");
    }
    const std::size_t len = static_cast<std::size_t>(hi - lo);
    window_ = len;

    std::vector<double> within_var;
    const bool track_within = count_ == 0;
    if (track_within) within_var.resize(lags_.size());

    const auto& k = kernels::active();
    for (std::size_t j = 0; j < lags_.size(); ++j) {
        const double* pa = ia.data() + lo;
        const double* pb = ib.data() + lo + lags_[j];
        const double s = k.dot(pa, pb, len);
        const double m = s / static_cast<double>(len);
        sum_[j] += m;
        sum_sq_[j] += m * m;
        if (track_within) {
            // within-trace variance of the product series, for the n=1 fallback
            double ss = 0.0;
            for (std::size_t t = 0; t < len; ++t) {
                const double p = pa[t] * pb[t];
                ss += (p - m) * (p - m);
            }
            within_var[j] = ss / static_cast<double>(len);
        }
    }
    if (track_within) first_within_var_ = std::move(within_var);
    ++count_;
}

void CorrelationAccumulator::add_point_values(const std::vector<double>& values) {
    if (values.size() != tau_grid_.size()) {
        throw std::invalid_argument("CorrelationAccumulator: point value count mismatch");
    }
    for (std::size_t j = 0; j < values.size(); ++j) {
        sum_[j] += values[j];
        sum_sq_[j] += values[j] * values[j];
    }
    ++count_;
}

CorrelationEstimate CorrelationAccumulator::finalize(std::optional<double> decorrelation_time) const {
    if (count_ == 0) throw std::logic_error("CorrelationAccumulator: no realizations");
    CorrelationEstimate est;
    est.tau_grid = tau_grid_;
    est.n_realizations = count_;
    est.n_time_samples = window_;
    est.mean.resize(tau_grid_.size());
    est.stderr_.resize(tau_grid_.size());
    const double n = static_cast<double>(count_);
    for (std::size_t j = 0; j < tau_grid_.size(); ++j) {
        const double mean = sum_[j] / n;
        est.mean[j] = mean;
        if (count_ > 1) {
            const double var = std::max(0.0, (sum_sq_[j] / n - mean * mean) * n / (n - 1.0));
            est.stderr_[j] = std::sqrt(var / n);
        } else if (decorrelation_time && *decorrelation_time > 0.0 && !first_within_var_.empty()) {
            const double duration = static_cast<double>(window_) * dt_;
            const double n_eff = std::max(1.0, duration / (2.0 * *decorrelation_time));
            est.stderr_[j] = std::sqrt(first_within_var_[j] / n_eff);
        } else {
            est.stderr_[j] = 0.0;
        }
    }
    return est;
}

CorrelationEstimate cross_correlate(const std::vector<double>& ia, const std::vector<double>& ib,
                                    double dt, const std::vector<double>& tau_grid) {
    CorrelationAccumulator acc(tau_grid, dt);
    acc.add_realization(ia, ib);
    return acc.finalize();
}

double slow_detector_rate(const std::vector<double>& ia, const std::vector<double>& ib, double dt,
                          const DetectorSpec& spec) {
    validate(spec);
    if (!(spec.resolve_time > 0.0)) {
        throw std::invalid_argument("slow_detector_rate: resolve_time must be positive");
    }
    if (ia.size() != ib.size()) {
        throw std::invalid_argument("slow_detector_rate: intensity arrays differ in length");
    }
    const std::size_t n = ia.size();
    const std::size_t k = static_cast<std::size_t>(std::llround(spec.resolve_time / dt));
    if (k + 16 > n) {
        throw std::invalid_argument("slow_detector_rate: trace shorter than the detector window");
    }
    // prefix sums of ib: window mean over tau in [0, T_R] is (k+1) lags wide
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + ib[i];
    const std::size_t t_max = n - k; // t + k must stay in range
    double acc = 0.0;
    for (std::size_t t = 0; t < t_max; ++t) {
        acc += ia[t] * (prefix[t + k + 1] - prefix[t]);
    }
    return acc / (static_cast<double>(k + 1) * static_cast<double>(t_max));
}

double ScalarAccumulator::mean() const {
    return n > 0 ? sum / static_cast<double>(n) : 0.0;
}

double ScalarAccumulator::stderr_() const {
    if (n < 2) return 0.0;
    const double nd = static_cast<double>(n);
    const double m = sum / nd;
    const double var = std::max(0.0, (sum_sq / nd - m * m) * nd / (nd - 1.0));
    return std::sqrt(var / nd);
}

} // namespace fourfold
