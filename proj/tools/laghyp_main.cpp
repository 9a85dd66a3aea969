// Command-line front end: self-tests, constant tables, and parameter
// sweeps over the uncertainty functionals.

#include "laghyp/config.hpp"
#include "laghyp/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

int main(int argc, char** argv) {
    CLI::App app{"Fourier-Laguerre analysis on the Laguerre hypergroup: self-tests, constants "
                 "and uncertainty-inequality sweeps"};
    app.require_subcommand(1);

    std::string config_path;
    auto* selftest = app.add_subcommand("selftest", "run all module invariant suites");
    selftest->add_option("--config", config_path, "configuration file");

    double alpha = 0.0;
    std::optional<double> a_opt, b_opt, p_opt;
    auto* constants = app.add_subcommand("constants", "print closed-form and constructive constants");
    constants->add_option("--alpha", alpha, "hypergroup parameter alpha >= 0")->required();
    constants->add_option("--a", a_opt, "space weight exponent");
    constants->add_option("--b", b_opt, "dual weight exponent");
    constants->add_option("--p", p_opt, "Lebesgue exponent");

    std::string sweep_config, out_dir;
    int threads = -1;
    auto* sweep = app.add_subcommand("sweep", "run the uncertainty-ratio sweep and emit CSV");
    sweep->add_option("--config", sweep_config, "configuration file");
    sweep->add_option("--out", out_dir, "output directory (overrides config)");
    sweep->add_option("--threads", threads, "worker threads (overrides config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (selftest->parsed()) {
            laghyp::SweepConfig cfg;
            if (!config_path.empty()) cfg = laghyp::parse_config_file(config_path);
            return laghyp::run_selftest(cfg, std::cout);
        }
        if (constants->parsed()) {
            if (alpha < 0.0) {
                std::cerr << "constants: alpha must be >= 0\n";
                return 2;
            }
            return laghyp::run_constants(alpha, a_opt, b_opt, p_opt, std::cout);
        }
        if (sweep->parsed()) {
            laghyp::SweepConfig cfg;
            if (!sweep_config.empty()) cfg = laghyp::parse_config_file(sweep_config);
            if (!out_dir.empty()) cfg.out_dir = out_dir;
            if (threads >= 0) cfg.threads = threads;
            return laghyp::run_sweep(cfg, std::cout);
        }
    } catch (const laghyp::ConfigError& ex) {
        std::cerr << "configuration error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
