#pragma once

#include <span>
#include <vector>

#include "q2col/graph.hpp"

namespace q2col {

/// Set of pairwise vertex-disjoint edges of a host graph, kept in canonical order.
class matching {
  public:
    matching() = default;

    /// Throws graph_error if an edge is missing from g or two edges share a vertex.
    static matching from_edges(const graph &g, std::vector<edge> edges);

    const std::vector<edge> &edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }

    /// mate[v] is v's partner or -1.
    std::vector<vertex_t> mates(int vertex_count) const;

  private:
    std::vector<edge> edges_;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm, greedy start).
/// Deterministic: vertices scanned by index, neighbors in ascending order.
matching maximum_matching(const graph &g);

bool is_perfect(const graph &g, const matching &m);

/// True iff every edge of g has an endpoint covered by m.
bool is_maximal(const graph &g, const matching &m);

/// True iff no augmenting path exists. Exhaustive search over simple
/// alternating paths, independent of maximum_matching; exponential in the
/// worst case, intended for test-sized graphs.
bool verify_maximality(const graph &g, const matching &m);

} // namespace q2col
