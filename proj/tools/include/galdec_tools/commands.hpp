#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galdec::cli {

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool strict = false;

    // params
    bool both_hbar = false;
    // evolve
    std::string state = "cat";                          // gaussian | cat | coherent-mixture
    std::vector<double> dt_over_tau = {0.01, 0.1, 1.0};
};

// Each command returns the process exit code: 0 all checks pass, 1 a check
// failed. Validation/parse problems are thrown (main maps them to 2).
int cmd_params(const Options& opt);
int cmd_sg_report(const Options& opt);
int cmd_figure1(const Options& opt);
int cmd_evolve(const Options& opt);
int cmd_collide(const Options& opt);
int cmd_overlap(const Options& opt);

}  // namespace galdec::cli
