#include "q2col/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

namespace q2col {

const char *to_string(graph_errc code) {
    switch (code) {
    case graph_errc::negative_vertex_count: return "negative vertex count";
    case graph_errc::vertex_out_of_range: return "vertex out of range";
    case graph_errc::self_loop: return "self-loop";
    case graph_errc::duplicate_edge: return "duplicate edge";
    case graph_errc::missing_edge: return "edge not in graph";
    case graph_errc::partial_coloring: return "partial coloring";
    case graph_errc::not_a_matching: return "not a matching";
    }
    return "unknown";
}

namespace {

std::string pair_str(vertex_t a, vertex_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

graph graph::build(int n, std::span<const std::pair<int, int>> edge_list) {
    std::vector<edge> es;
    es.reserve(edge_list.size());
    for (auto [a, b] : edge_list)
        es.push_back(edge{a, b});
    return build(n, std::span<const edge>(es));
}

graph graph::build(int n, std::span<const edge> edge_list) {
    if (n < 0)
        throw graph_error(graph_errc::negative_vertex_count, "vertex count " + std::to_string(n));
    graph g;
    g.edges_.reserve(edge_list.size());
    for (const auto &raw : edge_list) {
        if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n)
            throw graph_error(graph_errc::vertex_out_of_range,
                              "vertex out of range in " + pair_str(raw.u, raw.v) + " for n=" + std::to_string(n));
        if (raw.u == raw.v)
            throw graph_error(graph_errc::self_loop, "self-loop at vertex " + std::to_string(raw.u));
        g.edges_.push_back(make_edge(raw.u, raw.v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto it = std::adjacent_find(g.edges_.begin(), g.edges_.end()); it != g.edges_.end())
        throw graph_error(graph_errc::duplicate_edge, "duplicate edge " + pair_str(it->u, it->v));

    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto &e : g.edges_) {
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto &nb : g.adj_)
        std::sort(nb.begin(), nb.end());

    if (n > 0) {
        auto [lo, hi] = std::minmax_element(g.adj_.begin(), g.adj_.end(),
                                            [](const auto &a, const auto &b) { return a.size() < b.size(); });
        g.min_degree_ = static_cast<int>(lo->size());
        g.max_degree_ = static_cast<int>(hi->size());
    }
    return g;
}

std::optional<std::size_t> graph::edge_index(vertex_t a, vertex_t b) const {
    edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

edge_coloring edge_coloring::from_labels(const graph &g, std::vector<color_t> labels) {
    if (labels.size() != static_cast<std::size_t>(g.edge_count()))
        throw graph_error(graph_errc::partial_coloring,
                          "coloring has " + std::to_string(labels.size()) + " labels for " +
                              std::to_string(g.edge_count()) + " edges");
    std::unordered_map<color_t, color_t> relabel;
    edge_coloring c;
    c.colors_.reserve(labels.size());
    for (color_t raw : labels) {
        auto [it, fresh] = relabel.try_emplace(raw, static_cast<color_t>(relabel.size() + 1));
        c.colors_.push_back(it->second);
    }
    c.count_ = static_cast<int>(relabel.size());
    return c;
}

edge_coloring edge_coloring::from_assignment(const graph &g,
                                             std::span<const std::pair<edge, color_t>> assignment) {
    constexpr color_t unset = std::numeric_limits<color_t>::min();
    std::vector<color_t> labels(static_cast<std::size_t>(g.edge_count()), unset);
    for (const auto &[e, col] : assignment) {
        auto idx = g.edge_index(e);
        if (!idx)
            throw graph_error(graph_errc::missing_edge, "colored edge " + pair_str(e.u, e.v) + " is not in the graph");
        if (labels[*idx] != unset)
            throw graph_error(graph_errc::duplicate_edge, "edge " + pair_str(e.u, e.v) + " colored twice");
        labels[*idx] = col;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == unset)
            throw graph_error(graph_errc::partial_coloring,
                              "edge " + pair_str(g.edge_at(i).u, g.edge_at(i).v) + " has no color");
    return from_labels(g, std::move(labels));
}

std::vector<std::vector<std::size_t>> edge_coloring::classes() const {
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(count_) + 1);
    for (std::size_t i = 0; i < colors_.size(); ++i)
        out[static_cast<std::size_t>(colors_[i])].push_back(i);
    return out;
}

std::vector<std::vector<color_t>> palettes(const graph &g, const edge_coloring &c) {
    std::vector<std::vector<color_t>> pal(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto &e = g.edge_at(i);
        pal[static_cast<std::size_t>(e.u)].push_back(c.color_of(i));
        pal[static_cast<std::size_t>(e.v)].push_back(c.color_of(i));
    }
    for (auto &p : pal) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return pal;
}

coloring_check validate_coloring(const graph &g, const edge_coloring &c) {
    if (c.size() != static_cast<std::size_t>(g.edge_count()))
        throw graph_error(graph_errc::partial_coloring, "coloring does not cover the edge set");
    auto pal = palettes(g, c);
    for (vertex_t v = 0; v < g.vertex_count(); ++v) {
        if (pal[static_cast<std::size_t>(v)].size() > 2)
            return {false, v, pal[static_cast<std::size_t>(v)]};
    }
    return {};
}

std::vector<int> component_labels(const graph &g, const std::vector<bool> &removed) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> label(n, -1);
    std::vector<vertex_t> stack;
    int next = 0;
    for (vertex_t s = 0; s < g.vertex_count(); ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0)
            continue;
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            vertex_t x = stack.back();
            stack.pop_back();
            for (vertex_t y : g.neighbors(x)) {
                if (label[static_cast<std::size_t>(y)] >= 0)
                    continue;
                if (!removed.empty() && removed[*g.edge_index(x, y)])
                    continue;
                label[static_cast<std::size_t>(y)] = next;
                stack.push_back(y);
            }
        }
        ++next;
    }
    return label;
}

namespace {

std::vector<std::vector<vertex_t>> group_by_label(const std::vector<int> &label) {
    int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<vertex_t>> out(static_cast<std::size_t>(count));
    for (std::size_t v = 0; v < label.size(); ++v)
        out[static_cast<std::size_t>(label[v])].push_back(static_cast<vertex_t>(v));
    return out;
}

} // namespace

std::vector<std::vector<vertex_t>> connected_components(const graph &g) {
    return group_by_label(component_labels(g, {}));
}

std::vector<std::vector<vertex_t>> components_after_removal(const graph &g, std::span<const edge> removed) {
    std::vector<bool> flag(static_cast<std::size_t>(g.edge_count()), false);
    for (const auto &e : removed) {
        auto idx = g.edge_index(e);
        if (!idx)
            throw graph_error(graph_errc::missing_edge,
                              "removed edge " + pair_str(e.u, e.v) + " is not in the graph");
        flag[*idx] = true;
    }
    return group_by_label(component_labels(g, flag));
}

bool is_connected(const graph &g) {
    if (g.vertex_count() <= 1)
        return true;
    auto label = component_labels(g, {});
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

bool is_triangle_free(const graph &g) {
    for (const auto &e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j])
                return false;
            a[i] < b[j] ? ++i : ++j;
        }
    }
    return true;
}

bool is_bipartite(const graph &g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> side(n, -1);
    std::vector<vertex_t> stack;
    for (vertex_t s = 0; s < g.vertex_count(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            vertex_t x = stack.back();
            stack.pop_back();
            for (vertex_t y : g.neighbors(x)) {
                auto &sy = side[static_cast<std::size_t>(y)];
                if (sy < 0) {
                    sy = 1 - side[static_cast<std::size_t>(x)];
                    stack.push_back(y);
                } else if (sy == side[static_cast<std::size_t>(x)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace q2col
