#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mpde/dispatch.hpp"

int main(int argc, char** argv) {
    CLI::App app{"mpde: pseudospectral workbench for dispersive-diffusive model runs"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int workers = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::vector<std::string> overrides;

    app.add_option("--config", config_path, "Path to a key = value config file");
    app.add_option("--out", out_dir, "Output directory (fallback: MPDE_OUT, then ./mpde_out)");
    app.add_option("--workers", workers, "Worker count for independent runs");
    app.add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { seed = s; seed_set = true; },
        "Seed for the initial-data generator");
    app.add_option("--set", overrides, "Override section.key=value (repeatable)");

    for (const char* name : {"simulate", "sweep", "verify", "norms"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    if (out_dir.empty()) {
        const char* env = std::getenv("MPDE_OUT");
        out_dir = env && *env ? env : "mpde_out";
    }

    std::string text;
    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) {
            std::cerr << "cannot read config file: " << config_path << "\n";
            return mpde::exit_config_error;
        }
        std::ostringstream buf;
        buf << is.rdbuf();
        text = buf.str();
    }

    if (workers > 0)
        overrides.push_back("sweep.workers=" + std::to_string(workers));
    if (seed_set)
        overrides.push_back("initial.seed=" + std::to_string(seed));

    mpde::RunConfig cfg;
    try {
        cfg = mpde::parse_config(text, overrides);
    } catch (const mpde::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return mpde::exit_config_error;
    }

    return mpde::dispatch(command, cfg, out_dir);
}
