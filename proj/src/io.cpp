#include "fourfold/io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fourfold/interferometer.hpp"

namespace fourfold {

namespace {

constexpr const char* kColumns =
    "x\tmc_mean\tmc_stderr\tanalytic\tz\tdet1_mean\tdet1_stderr\tdet2_mean\tdet2_stderr\t"
    "det1_analytic\tdet2_analytic";

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("io: cannot open " + path + " for writing");
    return out;
}

} // namespace

void write_sweep_data(const std::string& path, const Config& cfg, const SweepResult& result) {
    std::ofstream out = open_out(path);
    out << "# sweep data\n";
    out << "# scenario: " << to_string(cfg.scenario) << "\n";
    out << "# variable: " << result.variable << "\n";
    out << "# realizations: " << cfg.ensemble.realizations << "\n";
    out << "# master_seed: " << cfg.ensemble.master_seed << "\n";
    out << "# generated: " << timestamp_utc() << "\n";
    out << "# columns: " << kColumns << "\n";
    for (const SweepPoint& p : result.points) {
        out << fmt(p.x) << '\t' << fmt(p.mc_mean) << '\t' << fmt(p.mc_stderr) << '\t'
            << fmt(p.analytic) << '\t' << fmt(p.z) << '\t' << fmt(p.det1_mean) << '\t'
            << fmt(p.det1_stderr) << '\t' << fmt(p.det2_mean) << '\t' << fmt(p.det2_stderr) << '\t'
            << fmt(p.det1_analytic) << '\t' << fmt(p.det2_analytic) << '\n';
    }
    if (!out) throw std::runtime_error("io: write to " + path + " failed");
}

SweepResult read_sweep_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    SweepResult result;
    std::string line;
    std::size_t n_within = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            constexpr const char* kVar = "# variable: ";
            if (line.rfind(kVar, 0) == 0) result.variable = line.substr(std::string(kVar).size());
            continue;
        }
        std::istringstream row(line);
        SweepPoint p;
        if (!(row >> p.x >> p.mc_mean >> p.mc_stderr >> p.analytic >> p.z >> p.det1_mean >>
              p.det1_stderr >> p.det2_mean >> p.det2_stderr >> p.det1_analytic >>
              p.det2_analytic))
            throw std::runtime_error("io: malformed data row in " + path + ": " + line);
        result.max_abs_z = std::max(result.max_abs_z, std::abs(p.z));
        if (std::abs(p.z) <= 3.0) ++n_within;
        result.points.push_back(p);
    }
    result.frac_within_3 = result.points.empty()
                               ? 0.0
                               : static_cast<double>(n_within) /
                                     static_cast<double>(result.points.size());
    return result;
}

std::string render_summary_json(const Config& cfg, const SweepResult& result) {
    nlohmann::json j;
    j["scenario"] = to_string(cfg.scenario);
    j["sweep_variable"] = result.variable;
    j["master_seed"] = cfg.ensemble.master_seed;
    j["realizations"] = cfg.ensemble.realizations;
    j["max_abs_z"] = result.max_abs_z;
    j["frac_within_3"] = result.frac_within_3;
    j["pass"] = result.pass;
    j["thresholds"] = {{"max_abs_z", cfg.thresholds.max_abs_z},
                       {"min_frac_within_3", cfg.thresholds.min_frac_within_3}};
    j["applied_defaults"] = cfg.applied_defaults;
    j["warnings"] = result.warnings;
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepPoint& p : result.points) {
        rows.push_back({{"x", p.x},
                        {"mc_mean", p.mc_mean},
                        {"mc_stderr", p.mc_stderr},
                        {"analytic", p.analytic},
                        {"z", p.z},
                        {"det1_mean", p.det1_mean},
                        {"det1_stderr", p.det1_stderr},
                        {"det2_mean", p.det2_mean},
                        {"det2_stderr", p.det2_stderr},
                        {"det1_analytic", p.det1_analytic},
                        {"det2_analytic", p.det2_analytic}});
    }
    j["points"] = rows;
    return j.dump(2) + "\n";
}

void write_summary_json(const std::string& path, const Config& cfg, const SweepResult& result) {
    std::ofstream out = open_out(path);
    out << render_summary_json(cfg, result);
    if (!out) throw std::runtime_error("io: write to " + path + " failed");
}

void write_trace(const std::string& path, const FieldTrace& trace) {
    std::ofstream out = open_out(path);
    out << "# field trace (complex envelope; physical field = envelope * exp(-i*carrier*t))\n";
    out << "# dt: " << fmt(trace.dt) << "\n";
    out << "# carrier: " << fmt(trace.carrier) << "\n";
    out << "# columns: t\tre\tim\n";
    for (std::size_t k = 0; k < trace.samples.size(); ++k) {
        const double t = static_cast<double>(k) * trace.dt;
        out << fmt(t) << '\t' << fmt(trace.samples[k].real()) << '\t'
            << fmt(trace.samples[k].imag()) << '\n';
    }
    if (!out) throw std::runtime_error("io: write to " + path + " failed");
}

} // namespace fourfold
