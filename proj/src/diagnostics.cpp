#include "q2col/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace q2col {

namespace {

constexpr std::size_t ix(vertex_t v) { return static_cast<std::size_t>(v); }

rational r(std::int64_t v) { return rational(v); }

std::string failure_message(const diagnostics_report &rep) {
    std::string msg = "asserted inequality failed (" + rep.mode + "):";
    for (const auto &f : rep.failed_assertions())
        msg += " " + f + ";";
    return msg;
}

void enforce(const diagnostics_report &rep) {
    if (!rep.asserted_hold())
        throw diagnostics_failure(rep);
}

bound_factors factors_for(int n, int delta, int Delta, int matching_size) {
    bound_factors b;
    const rational kappa = matching_size > 0 ? rational(n, matching_size) : rational(0);
    b.perfect = 1 + rational(2, delta);
    b.triangle_free = 1 + rational(1, delta - 1);
    b.general = 1 + (kappa + 2) / (delta - 1);
    b.general_d2 = 1 + (kappa + 2) / (delta - 2);
    b.kappa_cap = rational(2 * (Delta + delta), delta);
    b.corollary = 1 + (b.kappa_cap + 2) / (delta - 1);
    return b;
}

void require_min_degree_3(const graph &g, const char *op) {
    if (g.vertex_count() == 0 || g.min_degree() < 3)
        throw precondition_error(std::string(op) + " requires minimum degree >= 3");
}

diagnostics_report base_report(const graph &g, const matching &m, std::string mode) {
    diagnostics_report rep;
    rep.mode = std::move(mode);
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.delta = g.min_degree();
    rep.Delta = g.max_degree();
    rep.matching_size = m.size();
    rep.kappa = m.size() > 0 ? rational(rep.n, m.size()) : rational(0);
    rep.perfect_matching = is_perfect(g, m);
    rep.triangle_free = is_triangle_free(g);
    rep.dirac = rep.delta >= rep.n / 2;
    rep.bounds = factors_for(rep.n, rep.delta, rep.Delta, m.size());
    return rep;
}

void fill_chi_counts(diagnostics_report &rep, const characteristic_subgraph &chi) {
    rep.c = chi.color_count();
    rep.n0 = chi.n0;
    rep.n1 = chi.n1;
    rep.n2 = chi.n2;
    rep.paths = chi.path_count();
    rep.inequalities.push_back(make_inequality("n0+n1+n2 = n", r(rep.n0 + rep.n1 + rep.n2), relation::eq, r(rep.n), true));
    rep.inequalities.push_back(
        make_inequality("c = (2*n2+n1)/2", r(rep.c), relation::eq, rational(2 * rep.n2 + rep.n1, 2), true));
}

} // namespace

inequality make_inequality(std::string name, rational lhs, relation rel, rational rhs, bool asserted) {
    inequality q{std::move(name), lhs, rel, rhs, false, asserted};
    switch (rel) {
    case relation::le: q.holds = lhs <= rhs; break;
    case relation::eq: q.holds = lhs == rhs; break;
    case relation::ge: q.holds = lhs >= rhs; break;
    }
    return q;
}

bool diagnostics_report::asserted_hold() const {
    return std::all_of(inequalities.begin(), inequalities.end(),
                       [](const inequality &q) { return q.holds || !q.asserted; });
}

std::vector<std::string> diagnostics_report::failed_assertions() const {
    std::vector<std::string> out;
    for (const auto &q : inequalities)
        if (q.asserted && !q.holds)
            out.push_back(q.name + " [" + to_string(q.lhs) + " vs " + to_string(q.rhs) + "]");
    return out;
}

diagnostics_failure::diagnostics_failure(diagnostics_report report)
    : invariant_violation(failure_message(report)), report_(std::move(report)) {}

diagnostics_report diagnostics_perfect_matching(const graph &g, const edge_coloring &c) {
    require_min_degree_3(g, "diagnostics_perfect_matching");
    auto chi = build_characteristic_subgraph(g, c);
    auto rep = base_report(g, maximum_matching(g), "perfect");
    fill_chi_counts(rep, chi);
    const int n = rep.n, delta = rep.delta;
    const int n0 = rep.n0, n1 = rep.n1, n2 = rep.n2;

    // Proof graph H: edges from N2 vertices along non-χ edges.
    std::vector<int> h_deg(ix(n), 0);
    int h_edges = 0, n2_pairs = 0;
    for (vertex_t v = 0; v < n; ++v) {
        if (chi.degree[ix(v)] != 2)
            continue;
        for (vertex_t w : g.neighbors(v)) {
            if (chi.contains(make_edge(v, w)))
                continue;
            if (chi.degree[ix(w)] == 2) {
                ++n2_pairs;
                continue;
            }
            ++h_deg[ix(w)];
            ++h_edges;
        }
    }
    int max_n0 = 0, max_n1 = 0;
    for (vertex_t v = 0; v < n; ++v) {
        if (chi.degree[ix(v)] == 0)
            max_n0 = std::max(max_n0, h_deg[ix(v)]);
        if (chi.degree[ix(v)] == 1)
            max_n1 = std::max(max_n1, h_deg[ix(v)]);
    }
    rep.h_edges = h_edges;
    rep.n2_n2_non_chi_edges = n2_pairs / 2;
    rep.max_h_degree_n0 = max_n0;
    rep.max_h_degree_n1 = max_n1;

    auto &q = rep.inequalities;
    q.push_back(make_inequality("non-chi edges inside N2 = 0", r(n2_pairs / 2), relation::eq, r(0), true));
    q.push_back(make_inequality("d_H(N0) <= 4", r(max_n0), relation::le, r(4), true));
    q.push_back(make_inequality("d_H(N1) <= 2", r(max_n1), relation::le, r(2), true));
    q.push_back(make_inequality("n2*(delta-2) <= |E(H)|", r(n2 * (delta - 2)), relation::le, r(h_edges), true));
    q.push_back(make_inequality("|E(H)| <= 4*n0+2*n1", r(h_edges), relation::le, r(4 * n0 + 2 * n1), true));
    q.push_back(make_inequality("eq1: n2*(delta-2) <= 4*n0+2*n1", r(n2 * (delta - 2)), relation::le,
                                r(4 * n0 + 2 * n1), true));
    q.push_back(make_inequality("n2*delta <= 2n+2*n0", r(n2 * delta), relation::le, r(2 * n + 2 * n0), true));
    q.push_back(make_inequality("(n2-n0)*delta <= 2n", r((n2 - n0) * delta), relation::le, r(2 * n), true));
    q.push_back(make_inequality("c <= (n/2)(1+2/delta)", r(rep.c), relation::le, rational(n, 2) * rep.bounds.perfect, true));

    if (n2 * (delta - 2) == 4 * n0 + 2 * n1)
        rep.tight_steps.emplace_back("eq1");
    if (n2 * delta == 2 * n + 2 * n0)
        rep.tight_steps.emplace_back("n2*delta <= 2n+2*n0");
    if ((n2 - n0) * delta == 2 * n)
        rep.tight_steps.emplace_back("(n2-n0)*delta <= 2n");

    if (rep.triangle_free) {
        q.push_back(make_inequality("triangle-free d_H(N0) <= 2", r(max_n0), relation::le, r(2), true));
        q.push_back(make_inequality("triangle-free d_H(N1) <= 1", r(max_n1), relation::le, r(1), true));
        q.push_back(make_inequality("eq4: n2*(delta-2) <= 2*n0+n1", r(n2 * (delta - 2)), relation::le,
                                    r(2 * n0 + n1), true));
        q.push_back(make_inequality("n2*(delta-1) <= n+n0", r(n2 * (delta - 1)), relation::le, r(n + n0), true));
        q.push_back(make_inequality("c <= (n/2)(1+1/(delta-1))", r(rep.c), relation::le,
                                    rational(n, 2) * rep.bounds.triangle_free, true));
        if (n2 * (delta - 2) == 2 * n0 + n1)
            rep.tight_steps.emplace_back("eq4");
    }
    enforce(rep);
    return rep;
}

diagnostics_report diagnostics_general(const graph &g, const edge_coloring &c, const matching &m) {
    require_min_degree_3(g, "diagnostics_general");
    auto checked = matching::from_edges(g, m.edges());
    if (checked.size() != maximum_matching(g).size())
        throw precondition_error("diagnostics_general needs a maximum matching");

    auto chi = saturate_path_swaps(g, build_characteristic_subgraph(g, c), c);
    auto rep = base_report(g, checked, "general");
    fill_chi_counts(rep, chi);
    rep.swaps = chi.cycle_swaps + chi.path_swaps;
    const int n = rep.n, delta = rep.delta, msize = checked.size();
    auto &q = rep.inequalities;

    // Alternate edges from each path start; the second, fourth, ... edges are unselected.
    std::vector<bool> in_t(ix(n), false);
    std::vector<edge> selected;
    int t = 0;
    for (const auto &p : chi.paths) {
        for (std::size_t j = 1; j < p.size(); ++j) {
            if (j % 2 == 1) {
                selected.push_back(make_edge(p[j - 1], p[j]));
            } else {
                ++t;
                in_t[ix(p[j - 1])] = true;
            }
        }
    }
    rep.t = t;
    rep.selected = static_cast<int>(selected.size());
    const int t_size = static_cast<int>(std::count(in_t.begin(), in_t.end(), true));
    bool selected_is_matching = true;
    try {
        (void)matching::from_edges(g, selected);
    } catch (const graph_error &) {
        selected_is_matching = false;
    }

    int t_adjacent = 0;
    for (const auto &e : g.edges())
        if (in_t[ix(e.u)] && in_t[ix(e.v)])
            ++t_adjacent;

    // δ-2 special edges per T-vertex: lowest neighbors outside χ.
    std::vector<int> special(ix(n), 0);
    std::vector<std::vector<vertex_t>> special_from(ix(n));
    for (vertex_t v = 0; v < n; ++v) {
        if (!in_t[ix(v)])
            continue;
        int taken = 0;
        for (vertex_t w : g.neighbors(v)) {
            if (taken == delta - 2)
                break;
            if (chi.contains(make_edge(v, w)))
                continue;
            ++special[ix(w)];
            special_from[ix(w)].push_back(v);
            ++taken;
        }
    }
    int h[3] = {0, 0, 0};
    int max_special = 0, h2_covered = 0;
    for (vertex_t v = 0; v < n; ++v) {
        if (in_t[ix(v)])
            continue;
        max_special = std::max(max_special, special[ix(v)]);
        if (special[ix(v)] <= 2)
            ++h[special[ix(v)]];
        if (special[ix(v)] == 2 && chi.degree[ix(v)] != 0)
            ++h2_covered;
    }
    rep.h0 = h[0];
    rep.h1 = h[1];
    rep.h2 = h[2];

    q.push_back(make_inequality("M' is a matching", r(selected_is_matching), relation::eq, r(1), true));
    q.push_back(make_inequality("c = |M'|+t", r(rep.c), relation::eq, r(*rep.selected + t), true));
    q.push_back(make_inequality("c <= |M|+t", r(rep.c), relation::le, r(msize + t), true));
    q.push_back(make_inequality("|T| = t", r(t_size), relation::eq, r(t), true));
    q.push_back(make_inequality("T independent (edges inside T = 0)", r(t_adjacent), relation::eq, r(0), true));
    q.push_back(make_inequality("special edges per vertex <= 2", r(max_special), relation::le, r(2), true));
    q.push_back(make_inequality("h0+h1+h2 = n-t", r(h[0] + h[1] + h[2]), relation::eq, r(n - t), true));
    q.push_back(make_inequality("H2 outside chi (covered H2 vertices = 0)", r(h2_covered), relation::eq, r(0), true));
    q.push_back(make_inequality("eq6: t*(delta-2) = 2*h2+h1", r(t * (delta - 2)), relation::eq, r(2 * h[2] + h[1]), true));
    q.push_back(make_inequality("eq7: t*(delta-1) <= n+h2", r(t * (delta - 1)), relation::le, r(n + h[2]), true));

    // Consequences that rely on a path-maximal χ: reported only.
    std::vector<bool> terminal(ix(n), false), internal(ix(n), false);
    for (const auto &p : chi.paths) {
        terminal[ix(p.front())] = terminal[ix(p.back())] = true;
        for (std::size_t j = 1; j + 1 < p.size(); ++j)
            internal[ix(p[j])] = true;
    }
    rep.terminals = static_cast<int>(std::count(terminal.begin(), terminal.end(), true));
    auto outside = [&](vertex_t v) { return chi.degree[ix(v)] == 0; };

    std::vector<int> path_len(ix(n), 0);
    for (const auto &p : chi.paths)
        for (vertex_t v : p)
            path_len[ix(v)] = static_cast<int>(p.size()) - 1;
    int claim_a = 0, claim_b = 0;
    for (std::size_t k = 0; k < chi.edges.size(); ++k) {
        const edge uv = chi.edges[k];
        if (path_len[ix(uv.u)] < 2)
            continue;
        const auto a = static_cast<color_t>(k + 1);
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const auto &xy = g.edge_at(i);
            if (c.color_of(i) == a && outside(xy.u) && outside(xy.v))
                ++claim_a;
        }
        for (vertex_t w : g.neighbors(uv.u)) {
            auto vw = g.edge_index(uv.v, w);
            if (outside(w) && vw && c.color_of(*g.edge_index(uv.u, w)) == a && c.color_of(*vw) == a)
                ++claim_b;
        }
    }
    rep.claim_a_violations = claim_a;
    rep.claim_b_violations = claim_b;

    int claim_c = 0, max_x = 0;
    std::vector<int> x_deg(ix(n), 0);
    for (vertex_t v = 0; v < n; ++v) {
        if (in_t[ix(v)] || special[ix(v)] != 2)
            continue;
        for (vertex_t w : g.neighbors(v)) {
            if (in_t[ix(w)])
                continue;
            if (!terminal[ix(w)])
                ++claim_c;
            else
                ++x_deg[ix(w)];
        }
    }
    for (vertex_t v = 0; v < n; ++v)
        if (terminal[ix(v)])
            max_x = std::max(max_x, x_deg[ix(v)]);
    rep.claim_c_violations = claim_c;
    rep.max_x_degree = max_x;

    q.push_back(make_inequality("claim (a) violations = 0", r(claim_a), relation::eq, r(0), false));
    q.push_back(make_inequality("claim (b) violations = 0", r(claim_b), relation::eq, r(0), false));
    q.push_back(make_inequality("claim (c) violations = 0", r(claim_c), relation::eq, r(0), false));
    q.push_back(make_inequality("d_X(A) <= delta-2", r(max_x), relation::le, r(delta - 2), false));
    q.push_back(make_inequality("|A| <= 2|M|", r(*rep.terminals), relation::le, r(2 * msize), false));
    q.push_back(make_inequality("h2 <= 2|M|", r(h[2]), relation::le, r(2 * msize), false));
    q.push_back(make_inequality("t <= |M|(kappa+2)/(delta-1)", r(t), relation::le,
                                msize * (rep.kappa + 2) / (delta - 1), false));
    q.push_back(make_inequality("t <= |M|(kappa+2)/(delta-2)", r(t), relation::le,
                                msize * (rep.kappa + 2) / (delta - 2), false));
    enforce(rep);
    return rep;
}

diagnostics_report bound_report(const graph &g) {
    require_min_degree_3(g, "bound_report");
    if (!is_connected(g))
        throw precondition_error("bound_report requires a connected graph");
    auto m = maximum_matching(g);
    auto rep = base_report(g, m, "bounds");
    const int n = rep.n, ms = m.size();
    rep.inequalities.push_back(make_inequality("2|M|*Delta >= (n-2|M|)*delta", r(2 * ms * rep.Delta), relation::ge,
                                               r((n - 2 * ms) * rep.delta), true));
    rep.inequalities.push_back(
        make_inequality("kappa <= 2(Delta+delta)/delta", rep.kappa, relation::le, rep.bounds.kappa_cap, true));
    rep.inequalities.push_back(
        make_inequality("general factor <= corollary factor", rep.bounds.general, relation::le, rep.bounds.corollary, true));
    enforce(rep);
    return rep;
}

const char *to_string(verdict_status s) {
    switch (s) {
    case verdict_status::pass: return "pass";
    case verdict_status::fail: return "fail";
    case verdict_status::skipped: return "skipped";
    }
    return "unknown";
}

ratio_verdict check_ratio(const graph &g, std::optional<std::uint64_t> budget) {
    ratio_verdict v;
    v.run = run_algorithm(g);
    v.alg = v.run.alg_colors;
    v.oracle = exact_opt(g, budget);
    v.nodes_explored = v.oracle.nodes_explored;
    if (v.oracle.status != opt_status::exact) {
        v.status = verdict_status::skipped;
        return v;
    }
    const int opt = v.oracle.opt_colors;
    v.opt = opt;
    const int n = g.vertex_count(), delta = g.min_degree(), alg = v.alg;
    const int ms = v.run.matching_used.size();
    auto &q = v.checks;
    q.push_back(make_inequality("OPT >= ALG", r(opt), relation::ge, r(alg), true));
    if (delta >= 3) {
        auto b = factors_for(n, delta, g.max_degree(), ms);
        q.push_back(make_inequality("OPT <= path-packing bound", r(opt), relation::le, r(upper_bound_path_packing(g)), true));
        if (2 * ms == n) {
            q.push_back(make_inequality("OPT <= (1+2/delta)*ALG", r(opt), relation::le, b.perfect * alg, true));
            if (is_triangle_free(g))
                q.push_back(make_inequality("OPT <= (1+1/(delta-1))*ALG", r(opt), relation::le, b.triangle_free * alg, true));
        }
        if (delta >= n / 2) {
            q.push_back(make_inequality("ALG >= floor(n/2)+1", r(alg), relation::ge, r(n / 2 + 1), true));
            q.push_back(make_inequality("OPT <= ALG+1", r(opt), relation::le, r(alg + 1), true));
            if (n % 2 == 0 && delta > n / 2)
                q.push_back(make_inequality("OPT = ALG", r(opt), relation::eq, r(alg), true));
        }
        q.push_back(make_inequality("OPT <= (1+(kappa+2)/(delta-1))*ALG", r(opt), relation::le, b.general * alg, true));
        q.push_back(make_inequality("OPT <= (1+(kappa+2)/(delta-2))*ALG", r(opt), relation::le, b.general_d2 * alg, true));
    }
    bool ok = std::all_of(q.begin(), q.end(), [](const inequality &x) { return x.holds; });
    v.status = ok ? verdict_status::pass : verdict_status::fail;
    return v;
}

} // namespace q2col
