#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include "CLI11.hpp"

#include "fourfold/config.hpp"
#include "fourfold/interferometer.hpp"
#include "fourfold/io.hpp"
#include "fourfold/kernels.hpp"
#include "fourfold/sweep.hpp"

namespace {

struct RunOptions {
    std::string config_path;
    std::string output_dir = ".";
    int realizations = 0; // 0 keeps the config value
    long long seed = -1;  // <0 keeps the config value
    int workers = 1;
};

// 0 = pass, 2 = ran but failed thresholds, 1 = bad input / IO
int cmd_run(const RunOptions& opt) {
    fourfold::Config cfg = fourfold::load_config(opt.config_path);
    if (opt.realizations > 0) cfg.ensemble.realizations = opt.realizations;
    if (opt.seed >= 0) cfg.ensemble.master_seed = static_cast<std::uint64_t>(opt.seed);

    const fourfold::SweepResult result = fourfold::run_sweep(cfg, opt.workers);

    std::filesystem::create_directories(opt.output_dir);
    const std::string data_path = opt.output_dir + "/" + cfg.output.data_file;
    const std::string summary_path = opt.output_dir + "/" + cfg.output.summary_file;
    fourfold::write_sweep_data(data_path, cfg, result);
    fourfold::write_summary_json(summary_path, cfg, result);

    std::printf("scenario: %s, sweeping %s over %zu points\n",
                fourfold::to_string(cfg.scenario).c_str(), result.variable.c_str(),
                result.points.size());
    std::printf("realizations: %d, seed: %llu, workers: %d, kernels: %s\n",
                cfg.ensemble.realizations,
                static_cast<unsigned long long>(cfg.ensemble.master_seed), opt.workers,
                fourfold::kernels::active().name);
    for (const std::string& w : result.warnings) std::printf("warning: %s\n", w.c_str());
    std::printf("max |z| = %.3f (threshold %.3f), frac |z|<=3 = %.3f (threshold %.3f)\n",
                result.max_abs_z, cfg.thresholds.max_abs_z, result.frac_within_3,
                cfg.thresholds.min_frac_within_3);
    std::printf("%s\n", result.pass ? "PASS" : "FAIL");
    std::printf("wrote %s and %s\n", data_path.c_str(), summary_path.c_str());
    return result.pass ? 0 : 2;
}

int cmd_validate(const std::string& config_path) {
    const fourfold::Config cfg = fourfold::load_config(config_path);
    std::printf("valid: scenario %s, sweeping %s (%d points, %d realizations)\n",
                fourfold::to_string(cfg.scenario).c_str(), cfg.sweep.variable.c_str(),
                cfg.sweep.steps, cfg.ensemble.realizations);
    for (const std::string& d : cfg.applied_defaults)
        std::printf("default applied: %s\n", d.c_str());
    return 0;
}

int cmd_list_scenarios() {
    std::printf("scenarios:\n");
    std::printf("  uncorrelated_sources  two independent stationary sources into one mixer\n");
    std::printf("  hom_mz                equal delay pairs: bunching dip or flat line\n");
    std::printf("  scenario_i            common origin, randomized split, unbalanced pairs\n");
    std::printf("  scenario_ii           balanced limit of scenario_i (run scenario_i with\n");
    std::printf("                        t2 == t1 and t2p == t1p; not directly runnable)\n");
    std::printf("  scenario_iii          common origin, phase-stable split, crossed fringe\n");
    std::printf("  scenario_iv           scenario_i read out by a slow integrating detector\n");
    std::printf("  astronomy             two receivers plus reference beams, no mixer\n");
    std::printf("  pulsed                pulse trains with per-arm slot and sub-slot offsets\n");
    std::printf("sweep variables:\n");
    for (const std::string& v : fourfold::sweep_variable_names())
        std::printf("  %s\n", v.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fourth-order interference: ensemble simulator vs closed forms"};
    app.require_subcommand(1);

    RunOptions opt;
    CLI::App* run = app.add_subcommand("run", "run a sweep, write data and summary files");
    run->add_option("--config", opt.config_path, "JSON run description")->required();
    run->add_option("--output-dir", opt.output_dir, "directory for output files (default .)");
    run->add_option("--realizations", opt.realizations, "override ensemble.realizations");
    run->add_option("--seed", opt.seed, "override ensemble.master_seed");
    run->add_option("--workers", opt.workers,
                    "worker threads; results are identical for any count");

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "parse and check a config, then exit");
    validate->add_option("--config", validate_path, "JSON run description")->required();

    CLI::App* list = app.add_subcommand("list-scenarios", "print scenarios and sweep variables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(opt);
        if (validate->parsed()) return cmd_validate(validate_path);
        if (list->parsed()) return cmd_list_scenarios();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
