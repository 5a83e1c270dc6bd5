#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "q2col/analysis.hpp"
#include "q2col/approx.hpp"
#include "q2col/exact.hpp"
#include "q2col/generators.hpp"
#include "q2col/io.hpp"

namespace q2col::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t default_budget = 10'000'000;

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string csv_safe(std::string s) {
    for (auto &ch : s)
        if (ch == ',' || ch == '\n')
            ch = ';';
    return s;
}

std::string join_failures(const std::vector<std::string> &items) {
    std::string out;
    for (const auto &s : items)
        out += (out.empty() ? "" : "|") + csv_safe(s);
    return out;
}

std::vector<std::string> failed_checks(const std::vector<inequality> &qs) {
    std::vector<std::string> out;
    for (const auto &q : qs)
        if (q.asserted && !q.holds)
            out.push_back(q.name);
    return out;
}

int cmd_color(const run_config &cfg, std::ostream &out) {
    auto g = io::load_graph(cfg.input);
    alg_run run;
    if (cfg.matching.empty()) {
        run = run_algorithm(g);
    } else {
        if (!is_connected(g))
            throw precondition_error("graph is not connected");
        run = color_with_matching(g, io::load_matching(cfg.matching, g));
    }
    if (!cfg.output.empty())
        write_file(cfg.output, io::to_string(g, run.coloring));
    if (cfg.format == "text")
        out << "alg_colors=" << run.alg_colors << " matching_size=" << run.matching_used.size()
            << " components=" << run.component_count << '\n';
    else
        out << run_report_json(g, run) << '\n';
    return 0;
}

int cmd_exact(const run_config &cfg, std::ostream &out) {
    auto g = io::load_graph(cfg.input);
    auto res = exact_opt(g, effective_budget(cfg));
    if (!cfg.output.empty() && res.status == opt_status::exact)
        write_file(cfg.output, io::to_string(g, res.witness));
    out << opt_result_json(res) << '\n';
    return 0;
}

int cmd_verify(const run_config &cfg, std::ostream &out) {
    auto g = io::load_graph(cfg.input);
    json j;
    int code = 0;
    j["connected"] = is_connected(g);
    j["triangle_free"] = is_triangle_free(g);
    j["min_degree"] = g.min_degree();
    j["max_degree"] = g.max_degree();
    if (!cfg.coloring.empty()) {
        auto check = validate_coloring(g, io::load_coloring(cfg.coloring, g));
        j["coloring_valid"] = check.valid;
        if (!check.valid) {
            j["violation"] = {{"vertex", check.vertex}, {"palette", check.palette}};
            code = 1;
        }
    }
    if (!cfg.matching.empty()) {
        auto m = io::load_matching(cfg.matching, g);
        bool maximum = verify_maximality(g, m);
        j["matching_size"] = m.size();
        j["matching_maximal"] = is_maximal(g, m);
        j["matching_maximum"] = maximum;
        j["matching_perfect"] = is_perfect(g, m);
        if (!maximum)
            code = 1;
    }
    out << j.dump() << '\n';
    return code;
}

edge_coloring coloring_or_witness(const run_config &cfg, const graph &g) {
    if (!cfg.coloring.empty())
        return io::load_coloring(cfg.coloring, g);
    auto res = exact_opt(g, effective_budget(cfg));
    if (res.status != opt_status::exact)
        throw std::runtime_error("no --coloring given and the exact oracle ran out of budget");
    return res.witness;
}

int cmd_char(const run_config &cfg, std::ostream &out) {
    auto g = io::load_graph(cfg.input);
    auto c = coloring_or_witness(cfg, g);
    auto chi = build_characteristic_subgraph(g, c);
    if (cfg.saturate)
        chi = saturate_path_swaps(g, chi, c);
    out << to_json(chi) << '\n';
    return 0;
}

int cmd_diag(const run_config &cfg, std::ostream &out) {
    auto g = io::load_graph(cfg.input);
    auto c = coloring_or_witness(cfg, g);
    auto m = cfg.matching.empty() ? maximum_matching(g) : io::load_matching(cfg.matching, g);
    int code = 0;
    auto section = [&](auto &&fn) -> json {
        try {
            return json::parse(to_json(fn()));
        } catch (const diagnostics_failure &f) {
            code = 1;
            return json::parse(to_json(f.report()));
        }
    };
    json j;
    j["bounds"] = section([&] { return bound_report(g); });
    j["perfect"] = section([&] { return diagnostics_perfect_matching(g, c); });
    j["general"] = section([&] { return diagnostics_general(g, c, m); });
    out << j.dump() << '\n';
    return code;
}

int cmd_gen(const run_config &cfg, std::ostream &out) {
    if (cfg.output.empty())
        throw std::invalid_argument("gen needs --output PREFIX");
    const std::string &prefix = cfg.output;
    if (cfg.family == "tight1") {
        int t = cfg.t;
        if (t == 0)
            t = smallest_feasible_t(cfg.kappa, cfg.delta).value_or(0);
        auto inst = gen_tight1({cfg.kappa, cfg.delta, t});
        write_file(prefix + ".graph", io::to_string(inst.g));
        write_file(prefix + ".coloring", io::to_string(inst.g, inst.coloring));
        write_file(prefix + ".matching", io::to_string(inst.as_matching));
        write_file(prefix + ".json", provenance_json(inst) + "\n");
        out << provenance_json(inst) << '\n';
    } else if (cfg.family == "blowup") {
        auto inst = gen_blowup(gen_bipartite_regular(cfg.half, cfg.d));
        write_file(prefix + ".graph", io::to_string(inst.g));
        write_file(prefix + ".matching", io::to_string(inst.cross));
        write_file(prefix + ".m1.matching", io::to_string(inst.inner));
        write_file(prefix + ".coloring", io::to_string(inst.g, color_with_matching(inst.g, inst.cross).coloring));
        write_file(prefix + ".json", provenance_json(inst, cfg.half) + "\n");
        out << provenance_json(inst, cfg.half) << '\n';
    } else if (cfg.family == "bipartite") {
        auto base = gen_bipartite_regular(cfg.half, cfg.d);
        write_file(prefix + ".graph", io::to_string(base.g));
        write_file(prefix + ".coloring", io::to_string(base.g, base.coloring));
        json j{{"family", "bipartite"}, {"params", {{"half", cfg.half}, {"d", cfg.d}}}};
        write_file(prefix + ".json", j.dump() + "\n");
        out << j.dump() << '\n';
    } else if (cfg.family == "random") {
        auto g = gen_random_min_degree(cfg.n_max, cfg.delta, cfg.seed, cfg.triangle_free);
        write_file(prefix + ".graph", io::to_string(g));
        json j{{"family", "random"},
               {"params", {{"n", cfg.n_max}, {"delta", cfg.delta}, {"seed", cfg.seed}, {"triangle_free", cfg.triangle_free}}}};
        write_file(prefix + ".json", j.dump() + "\n");
        out << j.dump() << '\n';
    } else {
        throw std::invalid_argument("unknown family " + cfg.family);
    }
    return 0;
}

int cmd_ratio(const run_config &cfg, std::ostream &out) {
    auto g = io::load_graph(cfg.input);
    auto v = check_ratio(g, effective_budget(cfg));
    if (cfg.format == "json") {
        out << to_json(v) << '\n';
    } else if (cfg.format == "csv") {
        out << "check,lhs,rhs,holds\n";
        for (const auto &q : v.checks)
            out << csv_safe(q.name) << ',' << to_string(q.lhs) << ',' << to_string(q.rhs) << ',' << q.holds << '\n';
    } else {
        out << "status=" << to_string(v.status) << " OPT=" << (v.opt ? std::to_string(*v.opt) : "?")
            << " ALG=" << v.alg << '\n';
        for (const auto &q : v.checks)
            out << (q.holds ? "pass " : "FAIL ") << q.name << " : " << to_string(q.lhs) << " vs " << to_string(q.rhs)
                << '\n';
    }
    return v.status == verdict_status::fail ? 1 : 0;
}

// ---------------------------------------------------------------------------

int sweep_random(const run_config &cfg, std::ostream &csv) {
    csv << "index,seed,n,m,delta,Delta,matching_size,kappa,perfect_matching,triangle_free,dirac,alg,opt,status,"
           "c,n0,n1,n2,t,h0,h1,h2,factor_perfect,factor_triangle_free,factor_general,factor_general_d2,failures\n";
    int failed_rows = 0;
    const auto budget = effective_budget(cfg);
    const int span = std::max(1, cfg.n_max - cfg.n_min + 1);
    for (int i = 0; i < cfg.count; ++i) {
        const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
        const int n = cfg.n_min + static_cast<int>(seed % static_cast<std::uint64_t>(span));
        std::ostringstream row;
        row << i << ',' << seed << ',' << n << ',';
        graph g;
        try {
            g = gen_random_min_degree(n, cfg.delta, seed, cfg.triangle_free);
        } catch (const std::exception &e) {
            csv << row.str() << ",,,,,,,,,,infeasible,,,,,,,,,,,,," << csv_safe(e.what()) << '\n';
            continue;
        }
        std::vector<std::string> failures;
        auto v = check_ratio(g, budget);
        for (auto &f : failed_checks(v.checks))
            failures.push_back(f);
        const int ms = v.run.matching_used.size();
        const rational kappa(n, ms);
        row << g.edge_count() << ',' << g.min_degree() << ',' << g.max_degree() << ',' << ms << ','
            << to_string(kappa) << ',' << is_perfect(g, v.run.matching_used) << ',' << is_triangle_free(g) << ','
            << (g.min_degree() >= n / 2) << ',' << v.alg << ',' << (v.opt ? std::to_string(*v.opt) : "") << ','
            << to_string(v.status) << ',';

        std::optional<diagnostics_report> general;
        if (v.opt && g.min_degree() >= 3) {
            try {
                diagnostics_perfect_matching(g, v.oracle.witness);
            } catch (const diagnostics_failure &f) {
                for (auto &s : f.report().failed_assertions())
                    failures.push_back(s);
            }
            try {
                general = diagnostics_general(g, v.oracle.witness, v.run.matching_used);
            } catch (const diagnostics_failure &f) {
                general = f.report();
                for (auto &s : f.report().failed_assertions())
                    failures.push_back(s);
            }
        }
        if (general) {
            row << general->c << ',' << general->n0 << ',' << general->n1 << ',' << general->n2 << ',' << *general->t
                << ',' << *general->h0 << ',' << *general->h1 << ',' << *general->h2 << ','
                << to_string(general->bounds.perfect) << ',' << to_string(general->bounds.triangle_free) << ','
                << to_string(general->bounds.general) << ',' << to_string(general->bounds.general_d2) << ',';
        } else {
            row << ",,,,,,,,,,,,";
        }
        row << join_failures(failures);
        if (!failures.empty())
            ++failed_rows;
        csv << row.str() << '\n';
    }
    return failed_rows;
}

int sweep_tight1(const run_config &cfg, std::ostream &csv) {
    csv << "family,kappa,delta,t,h,alpha,n,min_degree,max_matching,colors,valid,target,colors_ge_target,failures\n";
    int t = cfg.t != 0 ? cfg.t : smallest_feasible_t(cfg.kappa, cfg.delta).value_or(0);
    csv << "tight1," << cfg.kappa << ',' << cfg.delta << ',' << t << ',';
    tight1_instance inst;
    try {
        inst = gen_tight1({cfg.kappa, cfg.delta, t});
    } catch (const feasibility_error &e) {
        csv << ",,,,,,,,," << csv_safe(e.what()) << '\n';
        return 0;
    }
    std::vector<std::string> failures;
    const int mm = maximum_matching(inst.g).size();
    const bool valid = validate_coloring(inst.g, inst.coloring).valid;
    const bool ge = rational(inst.coloring.color_count()) >= inst.target;
    if (!valid)
        failures.emplace_back("coloring invalid");
    if (inst.coloring.color_count() != inst.expected_colors)
        failures.emplace_back("color count differs from 2t-h-delta+2");
    if (inst.g.vertex_count() != cfg.kappa * t)
        failures.emplace_back("n != kappa*t");
    if (inst.g.min_degree() != cfg.delta)
        failures.emplace_back("min degree != delta");
    if (mm != t)
        failures.emplace_back("maximum matching != t");
    if (!ge)
        failures.emplace_back("colors < target");
    csv << inst.h << ',' << inst.alpha << ',' << inst.g.vertex_count() << ',' << inst.g.min_degree() << ',' << mm << ','
        << inst.coloring.color_count() << ',' << valid << ',' << to_string(inst.target) << ',' << ge << ','
        << join_failures(failures) << '\n';
    return failures.empty() ? 0 : 1;
}

int sweep_blowup(const run_config &cfg, std::ostream &csv) {
    csv << "family,d,half,n_prime,alg_cross,components_cross,alg_inner,components_inner,formula_cross,failures\n";
    csv << "blowup," << cfg.d << ',' << cfg.half << ',';
    blowup_instance inst;
    try {
        inst = gen_blowup(gen_bipartite_regular(cfg.half, cfg.d));
    } catch (const feasibility_error &e) {
        csv << ",,,,,,," << csv_safe(e.what()) << '\n';
        return 0;
    }
    const int np = inst.g.vertex_count();
    auto a = color_with_matching(inst.g, inst.cross);
    auto b = color_with_matching(inst.g, inst.inner);
    const rational formula = rational(np, 2) * (1 + rational(2, cfg.d));
    std::vector<std::string> failures;
    if (rational(a.alg_colors) != formula)
        failures.emplace_back("cross ALG != n'/2(1+2/d)");
    if (b.alg_colors != np / 2 + 1)
        failures.emplace_back("inner ALG != n'/2+1");
    if (a.component_count != np / cfg.d || b.component_count != 1)
        failures.emplace_back("component counts");
    csv << np << ',' << a.alg_colors << ',' << a.component_count << ',' << b.alg_colors << ',' << b.component_count << ','
        << to_string(formula) << ',' << join_failures(failures) << '\n';
    return failures.empty() ? 0 : 1;
}

} // namespace

std::uint64_t effective_budget(const run_config &cfg) {
    if (cfg.budget)
        return *cfg.budget;
    if (const char *env = std::getenv("Q2_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
        }
    }
    return default_budget;
}

int run_sweep(const run_config &cfg, std::ostream &csv) {
    if (cfg.family == "random")
        return sweep_random(cfg, csv);
    if (cfg.family == "tight1")
        return sweep_tight1(cfg, csv);
    if (cfg.family == "blowup")
        return sweep_blowup(cfg, csv);
    throw std::invalid_argument("unknown sweep family " + cfg.family);
}

int run(const run_config &cfg, std::ostream &out, std::ostream &err) {
    try {
        const auto &s = cfg.subcommand;
        if (s == "color")
            return cmd_color(cfg, out);
        if (s == "exact")
            return cmd_exact(cfg, out);
        if (s == "verify")
            return cmd_verify(cfg, out);
        if (s == "char")
            return cmd_char(cfg, out);
        if (s == "diag")
            return cmd_diag(cfg, out);
        if (s == "gen")
            return cmd_gen(cfg, out);
        if (s == "ratio")
            return cmd_ratio(cfg, out);
        if (s == "sweep") {
            int failed = 0;
            if (cfg.output.empty()) {
                failed = run_sweep(cfg, out);
            } else {
                std::ostringstream csv;
                failed = run_sweep(cfg, csv);
                write_file(cfg.output, csv.str());
            }
            if (failed > 0)
                err << "sweep: " << failed << " row(s) with hard failures\n";
            return failed > 0 ? 1 : 0;
        }
        err << "unknown subcommand " << s << '\n';
        return 2;
    } catch (const invariant_violation &e) {
        err << "invariant violated: " << e.what() << '\n';
        return 1;
    } catch (const parse_error &e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace q2col::cli
