// Command-line front end: simulate, experiment, diagnose.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Deterministic Landau equation lab: simulation and diagnostics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";

    CLI::App* simulate = app.add_subcommand("simulate", "evolve g0 and write time series");
    simulate->add_option("--config", config_path, "run configuration (JSON)")->required();
    simulate->add_option("--out", out_dir, "output directory");

    CLI::App* experiment = app.add_subcommand("experiment", "run the configured experiments");
    experiment->add_option("--config", config_path, "run configuration (JSON)")->required();
    experiment->add_option("--out", out_dir, "output directory");

    std::string f_snap, g_snap;
    std::vector<std::string> functionals;
    CLI::App* diagnose = app.add_subcommand("diagnose", "evaluate functionals on snapshots");
    diagnose->add_option("--f", f_snap, "snapshot base path (without extension)")->required();
    diagnose->add_option("--g", g_snap, "second snapshot base path for paired functionals");
    diagnose->add_option("--functionals", functionals, "comma separated functional names")
        ->required()
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            const landau::ExperimentConfig cfg = landau::parse_config(config_path);
            return landau::cmd_simulate(cfg, out_dir);
        }
        if (experiment->parsed()) {
            const landau::ExperimentConfig cfg = landau::parse_config(config_path);
            return landau::cmd_experiment(cfg, out_dir);
        }
        if (diagnose->parsed()) {
            return landau::cmd_diagnose(f_snap, g_snap, functionals);
        }
    } catch (const landau::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const landau::IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
    return 0;
}
