#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "q2col/errors.hpp"

namespace q2col {

using vertex_t = std::int32_t;
using color_t = std::int32_t;

/// Undirected edge stored canonically with u < v.
struct edge {
    vertex_t u = 0;
    vertex_t v = 0;

    auto operator<=>(const edge &) const = default;

    bool touches(vertex_t x) const { return u == x || v == x; }
    vertex_t other(vertex_t x) const { return x == u ? v : u; }
};

/// Canonical edge for an unordered pair. Does not reject u == v.
constexpr edge make_edge(vertex_t a, vertex_t b) { return a < b ? edge{a, b} : edge{b, a}; }

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted in canonical (u, v) order; an edge's position in
/// that order is its index, which colorings and matchings key on.
class graph {
  public:
    graph() = default;

    /// Validates and builds. Throws graph_error on self-loops, duplicate
    /// pairs and out-of-range endpoints.
    static graph build(int n, std::span<const std::pair<int, int>> edge_list);
    static graph build(int n, std::span<const edge> edge_list);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<edge> &edges() const { return edges_; }
    const edge &edge_at(std::size_t idx) const { return edges_[idx]; }

    std::span<const vertex_t> neighbors(vertex_t v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(vertex_t v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int min_degree() const { return min_degree_; }
    int max_degree() const { return max_degree_; }

    bool has_edge(vertex_t a, vertex_t b) const { return edge_index(a, b).has_value(); }
    std::optional<std::size_t> edge_index(vertex_t a, vertex_t b) const;
    std::optional<std::size_t> edge_index(const edge &e) const { return edge_index(e.u, e.v); }

  private:
    std::vector<edge> edges_;
    std::vector<std::vector<vertex_t>> adj_;
    int min_degree_ = 0;
    int max_degree_ = 0;
};

/// Total color assignment over the edges of a graph, indexed by edge index.
///
/// Labels are always normalized to 1..c in order of first appearance along
/// the canonical edge order. The vertex constraint is not enforced here;
/// use validate_coloring.
class edge_coloring {
  public:
    edge_coloring() = default;

    /// One label per edge index; any integer labels, renumbered on entry.
    static edge_coloring from_labels(const graph &g, std::vector<color_t> labels);
    /// Explicit (edge, label) pairs; every edge of g must appear exactly once.
    static edge_coloring from_assignment(const graph &g, std::span<const std::pair<edge, color_t>> assignment);

    color_t color_of(std::size_t edge_idx) const { return colors_[edge_idx]; }
    const std::vector<color_t> &colors() const { return colors_; }
    int color_count() const { return count_; }
    std::size_t size() const { return colors_.size(); }

    /// Edge indices per color; entry 0 is unused.
    std::vector<std::vector<std::size_t>> classes() const;

  private:
    std::vector<color_t> colors_;
    int count_ = 0;
};

/// Distinct colors incident to each vertex, sorted ascending.
std::vector<std::vector<color_t>> palettes(const graph &g, const edge_coloring &c);

struct coloring_check {
    bool valid = true;
    vertex_t vertex = -1;          ///< first offending vertex when !valid
    std::vector<color_t> palette;  ///< its palette
};

/// Checks that every vertex sees at most two colors. Throws graph_error
/// (partial_coloring) if the coloring does not cover exactly E(g).
coloring_check validate_coloring(const graph &g, const edge_coloring &c);

bool is_connected(const graph &g);
bool is_triangle_free(const graph &g);
bool is_bipartite(const graph &g);

std::vector<std::vector<vertex_t>> connected_components(const graph &g);

/// Components of g with removed edges deleted and all vertices kept.
/// Each component is sorted; components are ordered by smallest vertex.
std::vector<std::vector<vertex_t>> components_after_removal(const graph &g, std::span<const edge> removed);

/// Component id per vertex for g minus the edges flagged in `removed`
/// (indexed by edge index). Ids are 0.. in order of smallest vertex.
std::vector<int> component_labels(const graph &g, const std::vector<bool> &removed);

} // namespace q2col
