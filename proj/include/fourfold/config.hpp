#pragma once

// JSON run descriptions for the simulation harness. Parsing is strict: unknown
// keys and out-of-range values fail with the offending field spelled out, and
// every default that gets filled in is recorded in applied_defaults.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourfold/detection.hpp"
#include "fourfold/field.hpp"
#include "fourfold/interferometer.hpp"
#include "fourfold/pulsed_detection.hpp"

namespace fourfold {

struct SourceConfig {
    SourceKind kind = SourceKind::thermal; // thermal or coherent here
    double intensity = 1.0;
    double phase = 0.0; // coherent only
};

struct SweepConfig {
    std::string variable; // t1 t2 t1p t2p t2_both tau delta_phi_ref pulse_delta_d_both
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    std::vector<double> grid() const;
};

struct EnsembleConfig {
    int realizations = 64;
    double duration = 200.0;
    double dt = 0.05;
    std::uint64_t master_seed = 1;
};

struct ThresholdConfig {
    double max_abs_z = 4.0;
    double min_frac_within_3 = 0.9;
};

struct AstronomyConfig {
    double intensity_a = 1.0;
    double intensity_b = 1.0;
    double gamma_mag = 1.0;
    double gamma_phase = 0.0;
    double ref1 = 1.0;
    double ref2 = 1.0;
    double delta_phi_ref = 0.0;
};

struct PulsedConfig {
    int n_pulses = 512;
    double separation = 1.0;
    double pulse_width = 0.02;
    double carrier = 0.0;
    AmplitudeStats stats_a = AmplitudeStats::thermal;
    AmplitudeStats stats_b = AmplitudeStats::thermal;
    double energy_a = 1.0;
    double energy_b = 1.0;
    double relative_phase = 0.0;      // fixed phase of train B relative to A
    bool random_relative_phase = false;
    PulseOffsets offsets;
    int samples_per_slot = 128;
};

struct OutputConfig {
    std::string data_file = "sweep.tsv";
    std::string summary_file = "summary.json";
};

struct Config {
    ScenarioKind scenario = ScenarioKind::uncorrelated_sources;

    // Stationary-field sections (unused for pulsed runs).
    std::optional<CoherenceModel> coherence;
    std::optional<CoherenceModel> coherence_b; // second independent source, if it differs
    std::string source_topology = "independent"; // or common_origin_split
    SourceConfig source1, source2;
    double origin_intensity = 2.0; // common_origin_split: intensity before the split
    bool random_phase = false;
    DelayConfig delays;
    double tau = 0.0;
    double delta_phi = 0.0;

    DetectorSpec detector;
    std::optional<AstronomyConfig> astronomy;
    std::optional<PulsedConfig> pulsed;

    SweepConfig sweep;
    EnsembleConfig ensemble;
    ThresholdConfig thresholds;
    OutputConfig output;

    std::vector<std::string> applied_defaults;
};

// Both throw std::invalid_argument with the offending field in the message.
Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);

// All sweepable variable names, for diagnostics.
const std::vector<std::string>& sweep_variable_names();

} // namespace fourfold
