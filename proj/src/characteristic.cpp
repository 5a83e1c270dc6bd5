#include "q2col/analysis.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace q2col {

namespace {

constexpr std::size_t ix(vertex_t v) { return static_cast<std::size_t>(v); }

struct chi_adjacency {
    // Up to two (neighbor, color) pairs per vertex.
    std::vector<std::array<std::pair<vertex_t, color_t>, 2>> nb;
    std::vector<int> deg;

    chi_adjacency(int n, const std::vector<edge> &edges) : nb(ix(n)), deg(ix(n), 0) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto &e = edges[i];
            const auto col = static_cast<color_t>(i + 1);
            for (vertex_t x : {e.u, e.v}) {
                auto &d = deg[ix(x)];
                if (d >= 2)
                    throw invariant_violation("characteristic subgraph has a vertex of degree > 2 at " +
                                              std::to_string(x));
                nb[ix(x)][ix(d++)] = {e.other(x), col};
            }
        }
    }
};

// Smallest vertex on a χ-cycle, or -1.
vertex_t first_cycle_vertex(const chi_adjacency &adj) {
    const std::size_t n = adj.deg.size();
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || adj.deg[s] == 0)
            continue;
        bool all_two = true;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            all_two = all_two && adj.deg[x] == 2;
            for (int k = 0; k < adj.deg[x]; ++k) {
                auto y = ix(adj.nb[x][ix(k)].first);
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        if (all_two)
            return static_cast<vertex_t>(s);
    }
    return -1;
}

// Recomputes degrees, classes and oriented paths from chi.edges.
void refresh(const graph &g, characteristic_subgraph &chi) {
    chi_adjacency adj(g.vertex_count(), chi.edges);
    if (first_cycle_vertex(adj) >= 0)
        throw invariant_violation("characteristic subgraph still contains a cycle");
    chi.degree = adj.deg;
    chi.n0 = static_cast<int>(std::count(adj.deg.begin(), adj.deg.end(), 0));
    chi.n1 = static_cast<int>(std::count(adj.deg.begin(), adj.deg.end(), 1));
    chi.n2 = static_cast<int>(std::count(adj.deg.begin(), adj.deg.end(), 2));
    chi.paths.clear();
    std::vector<bool> seen(adj.deg.size(), false);
    for (vertex_t s = 0; s < g.vertex_count(); ++s) {
        if (seen[ix(s)] || adj.deg[ix(s)] != 1)
            continue;
        std::vector<vertex_t> path{s};
        seen[ix(s)] = true;
        vertex_t prev = -1, cur = s;
        for (;;) {
            vertex_t next = -1;
            for (int k = 0; k < adj.deg[ix(cur)]; ++k)
                if (adj.nb[ix(cur)][ix(k)].first != prev)
                    next = adj.nb[ix(cur)][ix(k)].first;
            if (next < 0)
                break;
            prev = cur;
            cur = next;
            seen[ix(cur)] = true;
            path.push_back(cur);
        }
        chi.paths.push_back(std::move(path));
    }
}

} // namespace

bool characteristic_subgraph::contains(const edge &e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

characteristic_subgraph build_characteristic_subgraph(const graph &g, const edge_coloring &c) {
    if (g.vertex_count() == 0 || g.min_degree() < 3)
        throw precondition_error("characteristic subgraph construction requires minimum degree >= 3");
    if (!validate_coloring(g, c).valid)
        throw precondition_error("coloring violates the two-colors-per-vertex constraint");

    characteristic_subgraph chi;
    auto classes = c.classes();
    for (std::size_t col = 1; col < classes.size(); ++col)
        chi.edges.push_back(g.edge_at(classes[col].front()));

    for (;;) {
        chi_adjacency adj(g.vertex_count(), chi.edges);
        vertex_t u = first_cycle_vertex(adj);
        if (u < 0)
            break;
        // u has degree 2 in χ and at least one more neighbor in g; prefer one outside χ.
        vertex_t z = -1;
        for (vertex_t w : g.neighbors(u)) {
            if (w == adj.nb[ix(u)][0].first || w == adj.nb[ix(u)][1].first)
                continue;
            if (z < 0 || (adj.deg[ix(w)] == 0 && adj.deg[ix(z)] != 0))
                z = w;
        }
        if (z < 0)
            throw invariant_violation("cycle vertex " + std::to_string(u) + " has no edge outside χ");
        const color_t a = c.color_of(*g.edge_index(u, z));
        if (adj.nb[ix(u)][0].second != a && adj.nb[ix(u)][1].second != a)
            throw invariant_violation("edge outside χ at a cycle vertex carries a third color");
        chi.edges[ix(a - 1)] = make_edge(u, z);
        ++chi.cycle_swaps;
    }
    refresh(g, chi);
    return chi;
}

characteristic_subgraph saturate_path_swaps(const graph &g, characteristic_subgraph chi, const edge_coloring &c) {
    auto classes = c.classes();
    for (;;) {
        refresh(g, chi);
        // Number of edges of the path holding each vertex.
        std::vector<int> path_len(ix(g.vertex_count()), 0);
        for (const auto &p : chi.paths)
            for (vertex_t v : p)
                path_len[ix(v)] = static_cast<int>(p.size()) - 1;
        auto outside = [&](vertex_t v) { return chi.degree[ix(v)] == 0; };

        std::optional<std::pair<std::size_t, edge>> move;
        for (std::size_t k = 0; k < chi.edges.size() && !move; ++k) {
            const edge uv = chi.edges[k];
            if (path_len[ix(uv.u)] < 2)
                continue;
            const color_t a = static_cast<color_t>(k + 1);
            for (std::size_t idx : classes[ix(a)]) {
                const auto &xy = g.edge_at(idx);
                if (outside(xy.u) && outside(xy.v)) {
                    move.emplace(k, xy);
                    break;
                }
            }
            if (move)
                break;
            for (auto [u, v] : {std::pair{uv.u, uv.v}, std::pair{uv.v, uv.u}}) {
                if (chi.degree[ix(u)] != 2)
                    continue;
                for (vertex_t w : g.neighbors(v)) {
                    if (!outside(w))
                        continue;
                    auto uw = g.edge_index(u, w);
                    if (uw && c.color_of(*uw) == a && c.color_of(*g.edge_index(v, w)) == a) {
                        move.emplace(k, make_edge(v, w));
                        break;
                    }
                }
                if (move)
                    break;
            }
        }
        if (!move)
            break;
        const int before = chi.path_count();
        chi.edges[move->first] = move->second;
        ++chi.path_swaps;
        refresh(g, chi);
        if (chi.path_count() <= before)
            throw invariant_violation("path swap did not increase the number of characteristic paths");
    }
    return chi;
}

std::vector<std::string> characteristic_problems(const graph &g, const edge_coloring &c,
                                                 const characteristic_subgraph &chi) {
    std::vector<std::string> out;
    if (chi.color_count() != c.color_count())
        out.push_back("has " + std::to_string(chi.color_count()) + " edges for " + std::to_string(c.color_count()) +
                      " colors");
    for (std::size_t k = 0; k < chi.edges.size(); ++k) {
        auto idx = g.edge_index(chi.edges[k]);
        if (!idx)
            out.push_back("edge " + std::to_string(k + 1) + " not in graph");
        else if (c.color_of(*idx) != static_cast<color_t>(k + 1))
            out.push_back("edge for color " + std::to_string(k + 1) + " has color " + std::to_string(c.color_of(*idx)));
    }
    if (!out.empty())
        return out;
    try {
        characteristic_subgraph fresh = chi;
        refresh(g, fresh);
        if (fresh.paths != chi.paths || fresh.degree != chi.degree)
            out.push_back("path decomposition is stale");
        int path_edges = 0;
        for (const auto &p : fresh.paths)
            path_edges += static_cast<int>(p.size()) - 1;
        if (path_edges != chi.color_count())
            out.push_back("paths do not cover every edge");
    } catch (const invariant_violation &e) {
        out.emplace_back(e.what());
    }
    return out;
}

} // namespace q2col
