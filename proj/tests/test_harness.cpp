#include <atomic>
#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fourfold/config.hpp"
#include "fourfold/io.hpp"
#include "fourfold/sweep.hpp"

using namespace fourfold;

namespace {

Config quick_config() {
    return parse_config(R"({
        "scenario": "uncorrelated_sources",
        "coherence": {"shape": "gaussian", "tc": 1.0, "omega": 50.0},
        "sources": {
            "topology": "independent",
            "source1": {"type": "thermal", "intensity": 1.0},
            "source2": {"type": "thermal", "intensity": 0.5}
        },
        "sweep": {"variable": "tau", "start": -1.0, "stop": 1.0, "steps": 5},
        "ensemble": {"realizations": 6, "duration": 150.0, "dt": 0.05, "master_seed": 17}
    })");
}

std::vector<std::string> lines_without_generated(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# generated:", 0) == 0) continue;
        out.push_back(line);
    }
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("fourfold_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_SUITE("harness") {

TEST_CASE("worker count never changes the numbers") {
    const Config cfg = quick_config();
    const SweepResult one = run_sweep(cfg, 1);
    const SweepResult two = run_sweep(cfg, 2);
    const SweepResult four = run_sweep(cfg, 4);
    REQUIRE(one.points.size() == two.points.size());
    for (std::size_t j = 0; j < one.points.size(); ++j) {
        // bitwise identical: fixed slots per realization, ordered reduction
        CHECK(one.points[j].mc_mean == two.points[j].mc_mean);
        CHECK(one.points[j].mc_stderr == two.points[j].mc_stderr);
        CHECK(one.points[j].mc_mean == four.points[j].mc_mean);
        CHECK(one.points[j].det1_mean == two.points[j].det1_mean);
        CHECK(one.points[j].det2_mean == four.points[j].det2_mean);
    }
    CHECK(one.max_abs_z == two.max_abs_z);
}

TEST_CASE("rerunning a config reproduces every byte except the timestamp") {
    const Config cfg = quick_config();
    const SweepResult r1 = run_sweep(cfg, 1);
    const SweepResult r2 = run_sweep(cfg, 2);
    TempDir tmp;
    const auto tsv1 = tmp.path / "a.tsv";
    const auto tsv2 = tmp.path / "b.tsv";
    const auto js1 = tmp.path / "a.json";
    const auto js2 = tmp.path / "b.json";
    write_sweep_data(tsv1.string(), cfg, r1);
    write_sweep_data(tsv2.string(), cfg, r2);
    write_summary_json(js1.string(), cfg, r1);
    write_summary_json(js2.string(), cfg, r2);
    CHECK(lines_without_generated(tsv1) == lines_without_generated(tsv2));
    // the summary embeds no timestamp at all
    CHECK(slurp(js1) == slurp(js2));
}

TEST_CASE("sweep data round trips through the tsv") {
    const Config cfg = quick_config();
    const SweepResult r = run_sweep(cfg, 1);
    TempDir tmp;
    const auto tsv = tmp.path / "round.tsv";
    write_sweep_data(tsv.string(), cfg, r);
    const SweepResult back = read_sweep_data(tsv.string());
    CHECK(back.variable == r.variable);
    REQUIRE(back.points.size() == r.points.size());
    for (std::size_t j = 0; j < r.points.size(); ++j) {
        // %.17g makes doubles round trip exactly
        CHECK(back.points[j].x == r.points[j].x);
        CHECK(back.points[j].mc_mean == r.points[j].mc_mean);
        CHECK(back.points[j].mc_stderr == r.points[j].mc_stderr);
        CHECK(back.points[j].analytic == r.points[j].analytic);
        CHECK(back.points[j].z == r.points[j].z);
        CHECK(back.points[j].det1_analytic == r.points[j].det1_analytic);
    }
    CHECK(back.max_abs_z == r.max_abs_z);
    CHECK(back.frac_within_3 == r.frac_within_3);
}

TEST_CASE("summaries carry the headline statistics") {
    const Config cfg = quick_config();
    const SweepResult r = run_sweep(cfg, 1);
    const std::string json = render_summary_json(cfg, r);
    CHECK(json.find("\"scenario\": \"uncorrelated_sources\"") != std::string::npos);
    CHECK(json.find("\"max_abs_z\"") != std::string::npos);
    CHECK(json.find("\"points\"") != std::string::npos);
    CHECK(json.find("\"pass\"") != std::string::npos);
    CHECK(json.find("generated") == std::string::npos); // deterministic output only
}

TEST_CASE("the analytic bump sits inside the monte carlo error bars") {
    Config cfg = quick_config();
    cfg.ensemble.realizations = 48;
    const SweepResult r = run_sweep(cfg, 2);
    CHECK(r.variable == "tau");
    REQUIRE(r.points.size() == 5);
    // peak value i1^2(1+1) + i2^2(1+1) + 2 i1 i2 - 2 i1 i2, in splitterless units
    CHECK(r.points[2].x == doctest::Approx(0.0));
    CHECK(r.points[2].analytic == doctest::Approx(2.5).epsilon(1e-12));
    for (const auto& p : r.points) CHECK(std::abs(p.z) < 4.0);
    CHECK(r.frac_within_3 >= 0.8);
}

} // TEST_SUITE
