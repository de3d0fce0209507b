#pragma once

// Least-squares fit of sampled sweeps to y = B * (1 + V * cos(2*pi*x/period + phi0)).
// Used to pull visibilities and fringe periods out of simulated sweeps.

#include <vector>

namespace fourfold {

struct FringeFit {
    double baseline = 0.0;   // B
    double visibility = 0.0; // V, >= 0
    double phi0 = 0.0;       // phase at x = 0, in (-pi, pi]
    double period = 0.0;
    double residual_rms = 0.0;
};

// Linear fit with the period held fixed. Needs >= 5 points and finite data.
FringeFit fit_fringe_fixed_period(const std::vector<double>& x, const std::vector<double>& y,
                                  double period);

// Scans periods within +/-10% of the hint, then refines by golden section.
// The x span must cover at least one period of the hint.
FringeFit fit_fringe(const std::vector<double>& x, const std::vector<double>& y,
                     double period_hint);

} // namespace fourfold
