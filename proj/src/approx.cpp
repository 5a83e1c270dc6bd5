#include "q2col/approx.hpp"

#include <json.hpp>

namespace q2col {

alg_run color_with_matching(const graph &g, const matching &m) {
    // Revalidate against g: the matching may come from a file built for another graph.
    auto checked = matching::from_edges(g, m.edges());
    if (!is_maximal(g, checked))
        throw precondition_error("matching is not maximal: some edge has both endpoints unmatched");

    const auto m_count = static_cast<std::size_t>(g.edge_count());
    std::vector<bool> in_m(m_count, false);
    std::vector<color_t> labels(m_count, 0);
    color_t next = 1;
    for (const auto &e : checked.edges()) {
        auto idx = *g.edge_index(e);
        in_m[idx] = true;
        labels[idx] = next++;
    }

    auto comp = component_labels(g, in_m);
    // Component ids follow smallest vertex; only those holding a non-matching edge get a color.
    std::vector<color_t> comp_color(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<bool> has_edge(static_cast<std::size_t>(g.vertex_count()), false);
    for (std::size_t i = 0; i < m_count; ++i)
        if (!in_m[i])
            has_edge[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.edge_at(i).u)])] = true;
    int components = 0;
    for (std::size_t c = 0; c < has_edge.size(); ++c) {
        if (has_edge[c]) {
            comp_color[c] = next++;
            ++components;
        }
    }
    for (std::size_t i = 0; i < m_count; ++i)
        if (!in_m[i])
            labels[i] = comp_color[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.edge_at(i).u)])];

    alg_run run;
    run.matching_used = std::move(checked);
    run.component_count = components;
    run.alg_colors = run.matching_used.size() + components;
    run.coloring = edge_coloring::from_labels(g, std::move(labels));
    return run;
}

alg_run run_algorithm(const graph &g) {
    if (g.vertex_count() < 2)
        throw precondition_error("run_algorithm needs at least 2 vertices");
    if (!is_connected(g))
        throw precondition_error("run_algorithm needs a connected graph");
    return color_with_matching(g, maximum_matching(g));
}

std::string run_report_json(const graph &g, const alg_run &run) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["matching_size"] = run.matching_used.size();
    j["components"] = run.component_count;
    j["alg_colors"] = run.alg_colors;
    return j.dump();
}

} // namespace q2col
