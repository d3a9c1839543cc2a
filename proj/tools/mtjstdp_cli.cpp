#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mtjstdp/commands.hpp"
#include "mtjstdp/default_profile.hpp"
#include "mtjstdp/parallel.hpp"

namespace {

struct GlobalOptions {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    int threads = 0;
    bool no_plot = false;
};

mtjstdp::ExperimentConfig load_config(const GlobalOptions& opt, bool seed_set, bool trials_set) {
    const std::string text = opt.config_path.empty() ? std::string(mtjstdp::default_profile_json)
                                                     : mtjstdp::read_file(opt.config_path);
    mtjstdp::ExperimentConfig cfg = mtjstdp::parse_config(text);
    if (seed_set) cfg.sim.master_seed = opt.seed;
    if (trials_set) cfg.sim.n_trials = opt.trials;
    cfg.sim.threads = opt.threads > 0 ? opt.threads : mtjstdp::default_thread_count();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic macrospin simulator for heat-mediated plasticity in MTJ crossbars"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--config", opt.config_path,
                   "JSON config path (omit to use the built-in default profile)");
    app.add_option("--out-dir", opt.out_dir, "Output directory (default: out)");
    auto* seed_opt = app.add_option("--seed", opt.seed, "Override simulation.master_seed");
    auto* trials_opt = app.add_option("--trials", opt.trials, "Override simulation.n_trials");
    app.add_option("--threads", opt.threads, "Worker threads (default: hardware concurrency)");
    app.add_flag("--no-plot", opt.no_plot, "Skip SVG plot output");

    auto* thermal =
        app.add_subcommand("thermal-trace", "Deterministic temperature trace of the trial waveform");
    auto* trial = app.add_subcommand("trial", "One stochastic trial with a per-step trace");
    auto* sweep =
        app.add_subcommand("stdp-sweep", "Switching probability vs pairing interval, both branches");
    auto* crossbar = app.add_subcommand("crossbar", "One realization of the crossbar array");

    CLI11_PARSE(app, argc, argv);

    try {
        const mtjstdp::ExperimentConfig cfg =
            load_config(opt, seed_opt->count() > 0, trials_opt->count() > 0);
        const std::filesystem::path out_dir(opt.out_dir);
        std::vector<std::filesystem::path> files;
        if (thermal->parsed()) files = mtjstdp::cmd_thermal_trace(cfg, out_dir, !opt.no_plot);
        if (trial->parsed()) files = mtjstdp::cmd_trial(cfg, out_dir, !opt.no_plot);
        if (sweep->parsed()) files = mtjstdp::cmd_stdp_sweep(cfg, out_dir, !opt.no_plot);
        if (crossbar->parsed()) files = mtjstdp::cmd_crossbar(cfg, out_dir, !opt.no_plot);
        for (const auto& f : files) std::cout << f.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
