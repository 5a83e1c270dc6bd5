#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char **argv) {
    q2col::cli::run_config cfg;
    CLI::App app{"Maximum edge 2-coloring: matching-based algorithm, exact oracle and bound diagnostics"};
    app.require_subcommand(1);

    auto input = [&](CLI::App *sub, bool required = true) {
        auto *opt = sub->add_option("--input,-i", cfg.input, "edge-list graph file")->check(CLI::ExistingFile);
        if (required)
            opt->required();
    };
    auto budget = [&](CLI::App *sub) {
        sub->add_option("--budget", cfg.budget, "exact search node budget (default: $Q2_BUDGET or 10000000)");
    };
    auto format = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto *color = app.add_subcommand("color", "run the matching-based algorithm");
    input(color);
    color->add_option("--matching", cfg.matching, "use this maximal matching instead of a maximum one")
        ->check(CLI::ExistingFile);
    color->add_option("--output,-o", cfg.output, "write the coloring here");
    format(color);

    auto *exact = app.add_subcommand("exact", "compute OPT exactly");
    input(exact);
    budget(exact);
    exact->add_option("--output,-o", cfg.output, "write the optimal witness coloring here");

    auto *verify = app.add_subcommand("verify", "validate a coloring and/or a matching");
    input(verify);
    verify->add_option("--coloring", cfg.coloring)->check(CLI::ExistingFile);
    verify->add_option("--matching", cfg.matching)->check(CLI::ExistingFile);

    auto *chr = app.add_subcommand("char", "characteristic subgraph of a coloring");
    input(chr);
    chr->add_option("--coloring", cfg.coloring, "default: an optimal coloring")->check(CLI::ExistingFile);
    chr->add_flag("--saturate", cfg.saturate, "apply path-increasing swaps");
    budget(chr);

    auto *diag = app.add_subcommand("diag", "counting diagnostics and bound factors");
    input(diag);
    diag->add_option("--coloring", cfg.coloring, "default: an optimal coloring")->check(CLI::ExistingFile);
    diag->add_option("--matching", cfg.matching, "maximum matching (default: computed)")->check(CLI::ExistingFile);
    budget(diag);

    auto *gen = app.add_subcommand("gen", "generate an instance family");
    gen->add_option("--family", cfg.family, "tight1|blowup|bipartite|random")
        ->check(CLI::IsMember({"tight1", "blowup", "bipartite", "random"}));
    gen->add_option("--output,-o", cfg.output, "output file prefix")->required();
    gen->add_option("--kappa", cfg.kappa);
    gen->add_option("--delta", cfg.delta);
    gen->add_option("--t", cfg.t, "0 picks the smallest feasible t");
    gen->add_option("--d", cfg.d);
    gen->add_option("--half", cfg.half);
    gen->add_option("--n", cfg.n_max, "vertex count for the random family");
    gen->add_option("--seed", cfg.seed);
    gen->add_flag("--triangle-free", cfg.triangle_free);

    auto *ratio = app.add_subcommand("ratio", "OPT versus ALG with every applicable bound");
    input(ratio);
    budget(ratio);
    format(ratio);

    auto *sweep = app.add_subcommand("sweep", "run many instances and emit CSV");
    sweep->add_option("--family", cfg.family, "random|tight1|blowup")->check(CLI::IsMember({"random", "tight1", "blowup"}));
    sweep->add_option("--count", cfg.count);
    sweep->add_option("--seed", cfg.seed);
    sweep->add_option("--n-min", cfg.n_min);
    sweep->add_option("--n-max", cfg.n_max);
    sweep->add_option("--delta", cfg.delta);
    sweep->add_option("--kappa", cfg.kappa);
    sweep->add_option("--t", cfg.t);
    sweep->add_option("--d", cfg.d);
    sweep->add_option("--half", cfg.half);
    sweep->add_flag("--triangle-free", cfg.triangle_free);
    sweep->add_option("--output,-o", cfg.output, "CSV path (default: stdout)");
    budget(sweep);

    CLI11_PARSE(app, argc, argv);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    return q2col::cli::run(cfg, std::cout, std::cerr);
}
