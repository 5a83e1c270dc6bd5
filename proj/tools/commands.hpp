#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace q2col::cli {

struct run_config {
    std::string subcommand; ///< color, exact, verify, char, diag, gen, ratio, sweep
    std::string input;
    std::string output;
    std::string matching;
    std::string coloring;
    std::string format = "json"; ///< text, json or csv
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> budget;
    int count = 100;
    std::string family = "random";
    int kappa = 0;
    int delta = 3;
    int t = 0;
    int d = 3;
    int half = 3;
    int n_min = 4;
    int n_max = 8;
    bool triangle_free = false;
    bool saturate = false;
};

/// Budget from the config, else Q2_BUDGET, else a fixed default.
std::uint64_t effective_budget(const run_config &cfg);

/// Runs one subcommand. Returns the process exit code: 0 success,
/// 1 failed check or invariant, 2 bad input.
int run(const run_config &cfg, std::ostream &out, std::ostream &err);

/// Sweep driver; writes CSV rows ordered by instance index and returns
/// the number of rows with a hard failure.
int run_sweep(const run_config &cfg, std::ostream &csv);

} // namespace q2col::cli
