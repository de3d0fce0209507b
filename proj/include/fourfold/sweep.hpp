#pragma once

// Runs a configured ensemble sweep: synthesizes realizations, pushes them
// through the network, pools per-realization estimates into mean and standard
// error per sweep point, evaluates the matching closed form, and z-scores the
// difference. Results are bitwise reproducible for a given seed, independent of
// the worker count: every (point, realization) estimate lands in a fixed slot
// and the reduction order never changes.

#include <string>
#include <vector>

#include "fourfold/config.hpp"

namespace fourfold {

struct SweepPoint {
    double x = 0.0;
    double mc_mean = 0.0;
    double mc_stderr = 0.0;
    double analytic = 0.0;
    double z = 0.0;
    // Mean photocurrent on each detector (physical units), with the closed-form
    // expectation; flat when the coincidence fringe is fourth-order only.
    double det1_mean = 0.0, det1_stderr = 0.0;
    double det2_mean = 0.0, det2_stderr = 0.0;
    double det1_analytic = 0.0, det2_analytic = 0.0;
};

struct SweepResult {
    std::string variable;
    std::vector<SweepPoint> points;
    double max_abs_z = 0.0;
    double frac_within_3 = 0.0;
    bool pass = false;
    std::vector<std::string> warnings;
};

SweepResult run_sweep(const Config& cfg, int workers = 1);

} // namespace fourfold
