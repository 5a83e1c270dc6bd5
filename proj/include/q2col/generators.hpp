#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "q2col/graph.hpp"
#include "q2col/matching.hpp"
#include "q2col/rational.hpp"

namespace q2col {

/// A generator was given parameters outside its feasible range.
class feasibility_error : public precondition_error {
  public:
    using precondition_error::precondition_error;
};

// ---------------------------------------------------------------------------
// Bipartite tight example for the κ-dependent bound.

struct tight1_params {
    int kappa = 0;
    int delta = 0;
    int t = 0;
};

/// Vertex blocks are contiguous: S1 = [0, δ), S2 = [δ, t), A = [t, 2t),
/// B = [2t, 2t + alpha). A-vertex i is matched with S-vertex i.
struct tight1_instance {
    tight1_params params;
    int h = 0;
    int alpha = 0;
    graph g;
    edge_coloring coloring;
    matching as_matching; ///< the A–S matching, size t
    int expected_colors = 0; ///< 2t - h - δ + 2
    rational target;         ///< t(1 + (κ-2)/(δ-1))
};

/// Throws feasibility_error naming the first violated constraint.
void check_tight1(const tight1_params &p);
tight1_instance gen_tight1(const tight1_params &p);

/// Smallest t that passes check_tight1 for the given κ and δ, searching up to t_max.
std::optional<int> smallest_feasible_t(int kappa, int delta, int t_max = 100000);

// ---------------------------------------------------------------------------
// Clique blow-up tight example for the perfect-matching bound.

/// A d-regular graph with a proper edge coloring in colors 1..d.
struct regular_base {
    int d = 0;
    graph g;
    edge_coloring coloring;
};

/// Circulant bipartite graph u_j ~ w_{(j+i) mod half}, i = 0..d-1, the edge
/// for offset i colored i+1. Vertices u_j = j, w_j = half + j.
regular_base gen_bipartite_regular(int half, int d);

struct blowup_instance {
    int d = 0;
    graph g;        ///< vertex v_i of the clique for base vertex v is v*d + (i-1)
    matching cross; ///< all non-clique edges
    matching inner; ///< per-clique pairs (plus color-d cross edges when d is odd)
};

/// Replaces every base vertex by K_d and joins u_i v_i whenever uv has color
/// i. For odd d the base must be bipartite and stay connected without its
/// color-d class. Throws feasibility_error on invalid input.
blowup_instance gen_blowup(const regular_base &base);

// ---------------------------------------------------------------------------
// Random instances.

/// Connected graph with min degree >= delta: random Hamilton path skeleton,
/// deficient vertices patched with random edges, then a random number of
/// extra edges. triangle_free draws a bipartite graph. Seed-deterministic.
graph gen_random_min_degree(int n, int delta, std::uint64_t seed, bool triangle_free = false);

/// Random valid edge 2-coloring of g. Seed-deterministic.
edge_coloring gen_random_coloring(const graph &g, std::uint64_t seed);

/// Per-instance seed derived from a base seed and an instance counter.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// {family, params, formulas_evaluated, vertex_blocks}
std::string provenance_json(const tight1_instance &inst);
std::string provenance_json(const blowup_instance &inst, int half);

} // namespace q2col
