#include <exception>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "galdec_tools/commands.hpp"

int main(int argc, char** argv) {
    using namespace galdec::cli;

    CLI::App app{"Galilean-fluctuation decoherence simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--config", opt.config_path, "configuration file")->required();
    app.add_option("--out", opt.out_dir, "output directory");
    app.add_option("--seed", opt.seed, "random seed recorded in the manifest");
    app.add_flag("--strict", opt.strict, "enable O(n^3) positivity checks on large grids");

    std::function<int(const Options&)> run;
    const auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) {
        sub->callback([&run, fn] { run = fn; });
        return sub;
    };

    auto* params = bind(app.add_subcommand("params", "derived-quantities tables"), cmd_params);
    params->add_flag("--both-hbar", opt.both_hbar, "also evaluate with SI hbar and print ratios");

    bind(app.add_subcommand("sg-report", "Stern-Gerlach scenario consistency report"),
         cmd_sg_report);
    bind(app.add_subcommand("figure1", "cat-state damping surfaces"), cmd_figure1);

    auto* evolve = bind(app.add_subcommand("evolve", "grid decoherence runs"), cmd_evolve);
    evolve->add_option("--state", opt.state, "gaussian | cat | coherent-mixture");
    evolve->add_option("--dt-over-tau", opt.dt_over_tau, "durations in units of tau")
        ->delimiter(',');

    bind(app.add_subcommand("collide", "atom-pointer collision trajectory"), cmd_collide);
    bind(app.add_subcommand("overlap", "coherent-state overlap map of a decohered cat"),
         cmd_overlap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 2 = validation error, 0 = help/version
    }

    try {
        return run(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
