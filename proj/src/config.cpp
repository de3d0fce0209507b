#include "fourfold/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fourfold {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("config: " + msg);
}

void expect_keys(const json& j, const std::string& path,
                 const std::set<std::string>& allowed) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            fail(path + "." + item.key() + " is not a recognized field");
}

double get_number(const json& j, const std::string& path, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number()) fail(path + "." + key + " must be a number");
    return v.get<double>();
}

double number_or(const json& j, const std::string& path, const char* key, double fallback,
                 std::vector<std::string>& defaults) {
    if (!j.contains(key)) {
        std::ostringstream os;
        os << path << "." << key << " = " << fallback;
        defaults.push_back(os.str());
        return fallback;
    }
    return get_number(j, path, key);
}

long get_integer(const json& j, const std::string& path, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) fail(path + "." + key + " must be an integer");
    return v.get<long>();
}

long integer_or(const json& j, const std::string& path, const char* key, long fallback,
                std::vector<std::string>& defaults) {
    if (!j.contains(key)) {
        defaults.push_back(path + "." + std::string(key) + " = " + std::to_string(fallback));
        return fallback;
    }
    return get_integer(j, path, key);
}

bool bool_or(const json& j, const std::string& path, const char* key, bool fallback,
             std::vector<std::string>& defaults) {
    if (!j.contains(key)) {
        defaults.push_back(path + "." + std::string(key) + (fallback ? " = true" : " = false"));
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_boolean()) fail(path + "." + key + " must be a boolean");
    return v.get<bool>();
}

std::string get_string(const json& j, const std::string& path, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_string()) fail(path + "." + key + " must be a string");
    return v.get<std::string>();
}

std::string string_or(const json& j, const std::string& path, const char* key,
                      const std::string& fallback, std::vector<std::string>& defaults) {
    if (!j.contains(key)) {
        defaults.push_back(path + "." + std::string(key) + " = " + fallback);
        return fallback;
    }
    return get_string(j, path, key);
}

CoherenceModel parse_coherence(const json& j, const std::string& path,
                               std::vector<std::string>& defaults) {
    if (!j.is_object()) fail(path + " must be an object");
    expect_keys(j, path, {"shape", "tc", "omega"});
    CoherenceModel m;
    const std::string shape = string_or(j, path, "shape", "gaussian", defaults);
    if (shape == "gaussian")
        m.shape = CoherenceShape::gaussian;
    else if (shape == "lorentzian")
        m.shape = CoherenceShape::lorentzian;
    else
        fail(path + ".shape must be \"gaussian\" or \"lorentzian\"");
    m.tc = j.contains("tc") ? get_number(j, path, "tc") : 1.0;
    if (!j.contains("tc")) defaults.push_back(path + ".tc = 1");
    if (!(m.tc > 0.0)) fail(path + ".tc must be positive");
    m.omega = number_or(j, path, "omega", 50.0 / m.tc, defaults);
    if (!(m.omega >= 0.0)) fail(path + ".omega must be >= 0");
    return m;
}

SourceConfig parse_source(const json& j, const std::string& path,
                          std::vector<std::string>& defaults) {
    if (!j.is_object()) fail(path + " must be an object");
    expect_keys(j, path, {"type", "intensity", "phase"});
    SourceConfig s;
    const std::string type = string_or(j, path, "type", "thermal", defaults);
    if (type == "thermal")
        s.kind = SourceKind::thermal;
    else if (type == "coherent")
        s.kind = SourceKind::coherent;
    else
        fail(path + ".type must be \"thermal\" or \"coherent\"");
    s.intensity = number_or(j, path, "intensity", 1.0, defaults);
    if (!(s.intensity > 0.0)) fail(path + ".intensity must be positive");
    s.phase = number_or(j, path, "phase", 0.0, defaults);
    if (!std::isfinite(s.phase)) fail(path + ".phase must be finite");
    return s;
}

SweepConfig parse_one_sweep(const json& j, const std::string& path,
                            std::vector<std::string>& defaults) {
    if (!j.is_object()) fail(path + " must be an object");
    expect_keys(j, path, {"variable", "start", "stop", "steps"});
    SweepConfig s;
    s.variable = get_string(j, path, "variable");
    bool known = false;
    for (const auto& name : sweep_variable_names()) known = known || name == s.variable;
    if (!known) {
        std::string names;
        for (const auto& name : sweep_variable_names()) names += " " + name;
        fail(path + ".variable \"" + s.variable + "\" is not one of:" + names);
    }
    s.start = get_number(j, path, "start");
    s.stop = get_number(j, path, "stop");
    if (!std::isfinite(s.start) || !std::isfinite(s.stop))
        fail(path + ".start/stop must be finite");
    s.steps = static_cast<int>(get_integer(j, path, "steps"));
    if (s.steps < 2) fail(path + ".steps must be at least 2");
    if (s.start == s.stop) fail(path + ".start and stop must differ");
    (void)defaults;
    return s;
}

AmplitudeStats parse_stats(const json& j, const std::string& path, const char* key,
                           std::vector<std::string>& defaults) {
    const std::string s = string_or(j, path, key, "thermal", defaults);
    if (s == "thermal") return AmplitudeStats::thermal;
    if (s == "coherent") return AmplitudeStats::coherent;
    fail(path + "." + key + " must be \"thermal\" or \"coherent\"");
}

} // namespace

std::vector<double> SweepConfig::grid() const {
    std::vector<double> xs(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k)
        xs[static_cast<std::size_t>(k)] =
            start + (stop - start) * static_cast<double>(k) / static_cast<double>(steps - 1);
    return xs;
}

const std::vector<std::string>& sweep_variable_names() {
    static const std::vector<std::string> names = {"t1",  "t2",  "t1p",           "t2p",
                                                   "t2_both", "tau", "delta_phi_ref",
                                                   "pulse_delta_d_both"};
    return names;
}

Config parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("not valid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("top level must be an object");
    expect_keys(root, "config",
                {"scenario", "coherence", "coherence_b", "sources", "delays", "tau", "delta_phi",
                 "detector", "astronomy", "pulsed", "sweep", "ensemble", "thresholds", "output"});

    Config cfg;
    auto& defaults = cfg.applied_defaults;

    if (!root.contains("scenario")) fail("scenario is required");
    cfg.scenario = scenario_from_string(get_string(root, "config", "scenario"));
    const bool is_pulsed = cfg.scenario == ScenarioKind::pulsed;
    const bool is_astro = cfg.scenario == ScenarioKind::astronomy;

    // sweep: exactly one swept variable
    if (!root.contains("sweep")) fail("sweep is required");
    if (root.at("sweep").is_array()) {
        const auto& arr = root.at("sweep");
        if (arr.size() != 1) {
            std::string vars;
            for (const auto& el : arr)
                if (el.is_object() && el.contains("variable") && el.at("variable").is_string())
                    vars += " \"" + el.at("variable").get<std::string>() + "\"";
            fail("sweep allows exactly one variable, got " + std::to_string(arr.size()) + ":" +
                 vars);
        }
        cfg.sweep = parse_one_sweep(arr.at(0), "sweep", defaults);
    } else {
        cfg.sweep = parse_one_sweep(root.at("sweep"), "sweep", defaults);
    }

    // ensemble
    if (!root.contains("ensemble")) fail("ensemble is required");
    {
        const auto& j = root.at("ensemble");
        if (!j.is_object()) fail("ensemble must be an object");
        expect_keys(j, "ensemble", {"realizations", "duration", "dt", "master_seed"});
        cfg.ensemble.realizations =
            static_cast<int>(integer_or(j, "ensemble", "realizations", 64, defaults));
        if (cfg.ensemble.realizations < 2)
            fail("ensemble.realizations must be >= 2 (the spread across realizations is the "
                 "error bar)");
        cfg.ensemble.duration = number_or(j, "ensemble", "duration", 200.0, defaults);
        if (!(cfg.ensemble.duration > 0.0)) fail("ensemble.duration must be positive");
        cfg.ensemble.dt = number_or(j, "ensemble", "dt", 0.05, defaults);
        if (!(cfg.ensemble.dt > 0.0)) fail("ensemble.dt must be positive");
        if (!j.contains("master_seed")) {
            defaults.push_back("ensemble.master_seed = 1");
            cfg.ensemble.master_seed = 1;
        } else {
            const auto& v = j.at("master_seed");
            if (!v.is_number_unsigned() && !v.is_number_integer())
                fail("ensemble.master_seed must be a non-negative integer");
            const auto seed = v.get<long long>();
            if (seed < 0) fail("ensemble.master_seed must be a non-negative integer");
            cfg.ensemble.master_seed = static_cast<std::uint64_t>(seed);
        }
    }

    // thresholds
    if (root.contains("thresholds")) {
        const auto& j = root.at("thresholds");
        if (!j.is_object()) fail("thresholds must be an object");
        expect_keys(j, "thresholds", {"max_abs_z", "min_frac_within_3"});
        cfg.thresholds.max_abs_z = number_or(j, "thresholds", "max_abs_z", 4.0, defaults);
        if (!(cfg.thresholds.max_abs_z > 0.0)) fail("thresholds.max_abs_z must be positive");
        cfg.thresholds.min_frac_within_3 =
            number_or(j, "thresholds", "min_frac_within_3", 0.9, defaults);
        if (cfg.thresholds.min_frac_within_3 < 0.0 || cfg.thresholds.min_frac_within_3 > 1.0)
            fail("thresholds.min_frac_within_3 must be in [0, 1]");
    } else {
        defaults.push_back("thresholds = {max_abs_z: 4, min_frac_within_3: 0.9}");
    }

    // output
    if (root.contains("output")) {
        const auto& j = root.at("output");
        if (!j.is_object()) fail("output must be an object");
        expect_keys(j, "output", {"data_file", "summary_file"});
        cfg.output.data_file = string_or(j, "output", "data_file", "sweep.tsv", defaults);
        cfg.output.summary_file = string_or(j, "output", "summary_file", "summary.json", defaults);
    } else {
        defaults.push_back("output = {data_file: sweep.tsv, summary_file: summary.json}");
    }

    // detector
    if (root.contains("detector")) {
        const auto& j = root.at("detector");
        if (!j.is_object()) fail("detector must be an object");
        expect_keys(j, "detector", {"resolve_time", "charge"});
        cfg.detector.resolve_time = number_or(j, "detector", "resolve_time", 0.0, defaults);
        if (!(cfg.detector.resolve_time >= 0.0)) fail("detector.resolve_time must be >= 0");
        cfg.detector.charge = number_or(j, "detector", "charge", 1.0, defaults);
        if (!(cfg.detector.charge > 0.0)) fail("detector.charge must be positive");
    } else {
        defaults.push_back("detector = {resolve_time: 0, charge: 1}");
    }

    // scenario-specific sections
    if (is_pulsed) {
        for (const char* key : {"coherence", "coherence_b", "sources", "delays", "astronomy"})
            if (root.contains(key))
                fail(std::string(key) + " does not apply to pulsed runs (use the pulsed section)");
        if (!root.contains("pulsed")) fail("pulsed section is required for scenario \"pulsed\"");
        const auto& j = root.at("pulsed");
        if (!j.is_object()) fail("pulsed must be an object");
        expect_keys(j, "pulsed",
                    {"n_pulses", "separation", "pulse_width", "carrier", "stats_a", "stats_b",
                     "energy_a", "energy_b", "relative_phase", "random_relative_phase", "offsets",
                     "samples_per_slot"});
        PulsedConfig p;
        p.n_pulses = static_cast<int>(integer_or(j, "pulsed", "n_pulses", 512, defaults));
        if (p.n_pulses < 64) fail("pulsed.n_pulses must be >= 64");
        p.separation = number_or(j, "pulsed", "separation", 1.0, defaults);
        if (!(p.separation > 0.0)) fail("pulsed.separation must be positive");
        p.pulse_width = number_or(j, "pulsed", "pulse_width", p.separation / 50.0, defaults);
        if (!(p.pulse_width > 0.0) || p.pulse_width > p.separation / 10.0)
            fail("pulsed.pulse_width must be in (0, separation/10]");
        p.carrier = number_or(j, "pulsed", "carrier", 0.0, defaults);
        if (!(p.carrier >= 0.0)) fail("pulsed.carrier must be >= 0");
        p.stats_a = parse_stats(j, "pulsed", "stats_a", defaults);
        p.stats_b = parse_stats(j, "pulsed", "stats_b", defaults);
        p.energy_a = number_or(j, "pulsed", "energy_a", 1.0, defaults);
        p.energy_b = number_or(j, "pulsed", "energy_b", 1.0, defaults);
        if (!(p.energy_a > 0.0)) fail("pulsed.energy_a must be positive");
        if (!(p.energy_b > 0.0)) fail("pulsed.energy_b must be positive");
        p.relative_phase = number_or(j, "pulsed", "relative_phase", 0.0, defaults);
        p.random_relative_phase =
            bool_or(j, "pulsed", "random_relative_phase", false, defaults);
        if (j.contains("offsets")) {
            const auto& o = j.at("offsets");
            if (!o.is_object()) fail("pulsed.offsets must be an object");
            expect_keys(o, "pulsed.offsets", {"n1", "n2", "n1p", "n2p", "d1", "d2", "d1p", "d2p"});
            p.offsets.n1 = integer_or(o, "pulsed.offsets", "n1", 0, defaults);
            p.offsets.n2 = integer_or(o, "pulsed.offsets", "n2", 0, defaults);
            p.offsets.n1p = integer_or(o, "pulsed.offsets", "n1p", 0, defaults);
            p.offsets.n2p = integer_or(o, "pulsed.offsets", "n2p", 0, defaults);
            p.offsets.d1 = number_or(o, "pulsed.offsets", "d1", 0.0, defaults);
            p.offsets.d2 = number_or(o, "pulsed.offsets", "d2", 0.0, defaults);
            p.offsets.d1p = number_or(o, "pulsed.offsets", "d1p", 0.0, defaults);
            p.offsets.d2p = number_or(o, "pulsed.offsets", "d2p", 0.0, defaults);
            for (double d : {p.offsets.d1, p.offsets.d2, p.offsets.d1p, p.offsets.d2p})
                if (std::abs(d) > p.separation / 4.0)
                    fail("pulsed.offsets.d* must satisfy |d| <= separation/4; fold whole slots "
                         "into n*");
        } else {
            defaults.push_back("pulsed.offsets = all zero");
        }
        p.samples_per_slot =
            static_cast<int>(integer_or(j, "pulsed", "samples_per_slot", 128, defaults));
        if (p.samples_per_slot < 64) fail("pulsed.samples_per_slot must be >= 64");
        if (!(cfg.detector.resolve_time > 0.0) || cfg.detector.resolve_time >= p.separation)
            fail("detector.resolve_time must be in (0, pulsed.separation) for pulsed runs");
        cfg.pulsed = p;
        if (cfg.sweep.variable != "pulse_delta_d_both")
            fail("sweep.variable for pulsed runs must be pulse_delta_d_both, got \"" +
                 cfg.sweep.variable + "\"");
        if (std::abs(cfg.sweep.start) > p.separation / 4.0 ||
            std::abs(cfg.sweep.stop) > p.separation / 4.0)
            fail("sweep: pulse_delta_d_both range must stay within +/- separation/4");
        return cfg;
    }

    if (root.contains("pulsed")) fail("pulsed section only applies to scenario \"pulsed\"");
    if (cfg.sweep.variable == "pulse_delta_d_both")
        fail("sweep.variable pulse_delta_d_both requires scenario \"pulsed\"");

    // stationary scenarios from here on
    if (!root.contains("coherence")) fail("coherence is required for stationary scenarios");
    cfg.coherence = parse_coherence(root.at("coherence"), "coherence", defaults);
    if (root.contains("coherence_b"))
        cfg.coherence_b = parse_coherence(root.at("coherence_b"), "coherence_b", defaults);
    if (cfg.ensemble.dt > cfg.coherence->tc / 20.0 + 1e-15)
        fail("ensemble.dt must be <= coherence.tc / 20 to resolve the envelope");
    if (cfg.ensemble.duration < 100.0 * cfg.coherence->tc)
        fail("ensemble.duration must be >= 100 * coherence.tc");

    cfg.tau = number_or(root, "config", "tau", 0.0, defaults);
    if (!std::isfinite(cfg.tau)) fail("tau must be finite");
    cfg.delta_phi = number_or(root, "config", "delta_phi", 0.0, defaults);
    if (!std::isfinite(cfg.delta_phi)) fail("delta_phi must be finite");

    if (is_astro) {
        for (const char* key : {"sources", "delays"})
            if (root.contains(key))
                fail(std::string(key) +
                     " does not apply to astronomy runs (use the astronomy section)");
        if (!root.contains("astronomy"))
            fail("astronomy section is required for scenario \"astronomy\"");
        const auto& j = root.at("astronomy");
        if (!j.is_object()) fail("astronomy must be an object");
        expect_keys(j, "astronomy",
                    {"intensity_a", "intensity_b", "gamma_mag", "gamma_phase", "ref1", "ref2",
                     "delta_phi_ref"});
        AstronomyConfig a;
        a.intensity_a = number_or(j, "astronomy", "intensity_a", 1.0, defaults);
        a.intensity_b = number_or(j, "astronomy", "intensity_b", 1.0, defaults);
        if (!(a.intensity_a > 0.0)) fail("astronomy.intensity_a must be positive");
        if (!(a.intensity_b > 0.0)) fail("astronomy.intensity_b must be positive");
        a.gamma_mag = number_or(j, "astronomy", "gamma_mag", 1.0, defaults);
        if (a.gamma_mag < 0.0 || a.gamma_mag > 1.0)
            fail("astronomy.gamma_mag must be in [0, 1]");
        a.gamma_phase = number_or(j, "astronomy", "gamma_phase", 0.0, defaults);
        a.ref1 = number_or(j, "astronomy", "ref1", a.intensity_a, defaults);
        a.ref2 = number_or(j, "astronomy", "ref2", a.intensity_b, defaults);
        if (!(a.ref1 >= 0.0)) fail("astronomy.ref1 must be >= 0");
        if (!(a.ref2 >= 0.0)) fail("astronomy.ref2 must be >= 0");
        a.delta_phi_ref = number_or(j, "astronomy", "delta_phi_ref", 0.0, defaults);
        cfg.astronomy = a;
        if (cfg.sweep.variable != "delta_phi_ref" && cfg.sweep.variable != "tau")
            fail("astronomy runs sweep delta_phi_ref or tau, got \"" + cfg.sweep.variable + "\"");
        if (cfg.detector.resolve_time != 0.0)
            fail("detector.resolve_time: slow detectors apply to scenario_iv only");
        return cfg;
    }

    if (root.contains("astronomy"))
        fail("astronomy section only applies to scenario \"astronomy\"");
    if (cfg.sweep.variable == "delta_phi_ref")
        fail("sweep.variable delta_phi_ref requires scenario \"astronomy\"");

    // sources
    if (!root.contains("sources")) fail("sources is required");
    {
        const auto& j = root.at("sources");
        if (!j.is_object()) fail("sources must be an object");
        expect_keys(j, "sources",
                    {"topology", "source1", "source2", "origin_intensity", "random_phase"});
        cfg.source_topology = string_or(j, "sources", "topology", "independent", defaults);
        if (cfg.source_topology != "independent" && cfg.source_topology != "common_origin_split")
            fail("sources.topology must be \"independent\" or \"common_origin_split\"");
        if (cfg.source_topology == "independent") {
            if (j.contains("origin_intensity"))
                fail("sources.origin_intensity only applies to common_origin_split");
            if (j.contains("source1"))
                cfg.source1 = parse_source(j.at("source1"), "sources.source1", defaults);
            else
                defaults.push_back("sources.source1 = thermal, intensity 1");
            if (j.contains("source2"))
                cfg.source2 = parse_source(j.at("source2"), "sources.source2", defaults);
            else
                defaults.push_back("sources.source2 = thermal, intensity 1");
        } else {
            for (const char* key : {"source1", "source2"})
                if (j.contains(key))
                    fail(std::string("sources.") + key +
                         " does not apply to common_origin_split (set origin_intensity)");
            cfg.origin_intensity = number_or(j, "sources", "origin_intensity", 2.0, defaults);
            if (!(cfg.origin_intensity > 0.0)) fail("sources.origin_intensity must be positive");
        }
        cfg.random_phase = bool_or(j, "sources", "random_phase",
                                   cfg.source_topology == "common_origin_split", defaults);
    }

    // delays
    if (root.contains("delays")) {
        const auto& j = root.at("delays");
        if (!j.is_object()) fail("delays must be an object");
        expect_keys(j, "delays", {"t1", "t2", "t1p", "t2p"});
        cfg.delays.t1 = number_or(j, "delays", "t1", 0.0, defaults);
        cfg.delays.t2 = number_or(j, "delays", "t2", 0.0, defaults);
        cfg.delays.t1p = number_or(j, "delays", "t1p", 0.0, defaults);
        cfg.delays.t2p = number_or(j, "delays", "t2p", 0.0, defaults);
        for (double t : {cfg.delays.t1, cfg.delays.t2, cfg.delays.t1p, cfg.delays.t2p})
            if (!std::isfinite(t)) fail("delays.* must be finite");
    } else {
        defaults.push_back("delays = all zero");
    }

    // per-scenario consistency
    const bool common = cfg.source_topology == "common_origin_split";
    if (cfg.scenario == ScenarioKind::scenario_ii)
        fail("scenario_ii is the balanced limit of scenario_i; run scenario_i with t2 == t1 "
             "and t2p == t1p instead");
    switch (cfg.scenario) {
        case ScenarioKind::uncorrelated_sources:
        case ScenarioKind::hom_mz:
            if (common)
                fail("sources.topology must be \"independent\" for scenario " +
                     to_string(cfg.scenario));
            break;
        case ScenarioKind::scenario_i:
        case ScenarioKind::scenario_iii:
        case ScenarioKind::scenario_iv:
            if (!common)
                fail("sources.topology must be \"common_origin_split\" for scenario " +
                     to_string(cfg.scenario));
            break;
        default:
            break;
    }
    if ((cfg.scenario == ScenarioKind::scenario_i || cfg.scenario == ScenarioKind::scenario_iv) &&
        !cfg.random_phase)
        fail("sources.random_phase must be true for scenario " + to_string(cfg.scenario) +
             " (the closed form phase-averages the split)");
    if (!common && cfg.source1.kind == SourceKind::coherent &&
        cfg.source2.kind == SourceKind::coherent && !cfg.random_phase)
        fail("sources.random_phase must be true when both sources are coherent (the ensemble "
             "averages over their relative phase; a fixed pair interferes deterministically)");
    if (cfg.scenario == ScenarioKind::scenario_iii && cfg.random_phase)
        fail("sources.random_phase must be false for scenario scenario_iii (the crossed fringe "
             "needs a stable relative phase)");
    if (cfg.scenario == ScenarioKind::hom_mz) {
        if (cfg.delays.t1p != cfg.delays.t1 || cfg.delays.t2p != cfg.delays.t2)
            fail("delays: scenario hom_mz requires t1p == t1 and t2p == t2");
        if (cfg.sweep.variable != "tau" && cfg.sweep.variable != "t2_both")
            fail("sweep.variable for scenario hom_mz must be tau or t2_both (anything else "
                 "breaks the equal delay pairs)");
    }
    if (cfg.scenario == ScenarioKind::scenario_iv) {
        if (!(cfg.detector.resolve_time > 0.0))
            fail("detector.resolve_time must be positive for scenario_iv (slow detector)");
        if (cfg.sweep.variable == "tau")
            fail("sweep.variable tau does not apply to scenario_iv (the slow detector integrates "
                 "over it)");
        if (cfg.ensemble.duration < 2.0 * cfg.detector.resolve_time)
            fail("ensemble.duration must be >= 2 * detector.resolve_time");
    } else if (cfg.detector.resolve_time != 0.0) {
        fail("detector.resolve_time: slow detectors apply to scenario_iv only");
    }
    if (cfg.coherence_b && common)
        fail("coherence_b does not apply to common_origin_split sources");
    if (cfg.coherence_b && cfg.coherence_b->omega != cfg.coherence->omega)
        fail("coherence_b.omega must equal coherence.omega, the mixer needs one carrier");

    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace fourfold
