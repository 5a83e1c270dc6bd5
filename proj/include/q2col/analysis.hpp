#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "q2col/approx.hpp"
#include "q2col/exact.hpp"
#include "q2col/graph.hpp"
#include "q2col/matching.hpp"
#include "q2col/rational.hpp"

namespace q2col {

/// One edge per color of a coloring, with max degree <= 2 and no cycles.
struct characteristic_subgraph {
    std::vector<edge> edges;                   ///< edges[c-1] carries color c
    std::vector<std::vector<vertex_t>> paths;  ///< vertex sequences, each from its smaller terminal
    std::vector<int> degree;                   ///< χ-degree per vertex
    int n0 = 0, n1 = 0, n2 = 0;
    int cycle_swaps = 0;                       ///< swaps spent removing cycles
    int path_swaps = 0;                        ///< swaps applied by saturate_path_swaps

    int color_count() const { return static_cast<int>(edges.size()); }
    int path_count() const { return static_cast<int>(paths.size()); }
    bool contains(const edge &e) const;
};

/// Picks the lowest canonical edge of every color class, then breaks cycles:
/// on a cycle vertex u, a non-χ edge uz shares its color with one of u's
/// cycle edges uv, and uv is exchanged for uz. Each exchange removes one cycle.
/// Requires min degree >= 3 and a valid coloring (precondition_error otherwise).
characteristic_subgraph build_characteristic_subgraph(const graph &g, const edge_coloring &c);

/// Applies exchanges that strictly raise the number of characteristic paths
/// until none applies. For a color a whose χ-edge uv sits on a path with at
/// least two edges: (a) swap uv for an a-colored edge between two vertices
/// outside χ; (b) with u internal, swap uv for vw when uvw is an a-colored
/// triangle and w is outside χ.
characteristic_subgraph saturate_path_swaps(const graph &g, characteristic_subgraph chi, const edge_coloring &c);

/// Structural problems of a purported characteristic subgraph (empty = fine):
/// wrong edge count, wrong colors, degree > 2, cycles, stale path data.
std::vector<std::string> characteristic_problems(const graph &g, const edge_coloring &c,
                                                 const characteristic_subgraph &chi);

enum class relation { le, eq, ge };

/// One evaluated inequality: lhs REL rhs.
struct inequality {
    std::string name;
    rational lhs;
    relation rel = relation::le;
    rational rhs;
    bool holds = false;
    bool asserted = false; ///< a failure of an asserted inequality is a hard failure
};

inequality make_inequality(std::string name, rational lhs, relation rel, rational rhs, bool asserted);

struct bound_factors {
    rational perfect;        ///< 1 + 2/δ
    rational triangle_free;  ///< 1 + 1/(δ-1)
    rational general;        ///< 1 + (κ+2)/(δ-1)
    rational general_d2;     ///< 1 + (κ+2)/(δ-2), the weaker reading
    rational kappa_cap;      ///< 2(Δ+δ)/δ, an upper bound on κ
    rational corollary;      ///< 1 + (kappa_cap+2)/(δ-1)
};

struct diagnostics_report {
    std::string mode; ///< "perfect", "general" or "bounds"
    int n = 0;
    int m = 0;
    int delta = 0;
    int Delta = 0;
    int matching_size = 0;
    rational kappa;
    bool perfect_matching = false;
    bool triangle_free = false;
    bool dirac = false; ///< δ >= ⌊n/2⌋

    int c = 0;
    int n0 = 0, n1 = 0, n2 = 0;
    int paths = 0;

    // Counting for the N2 → N0 ∪ N1 proof graph.
    std::optional<int> h_edges;
    std::optional<int> n2_n2_non_chi_edges;
    std::optional<int> max_h_degree_n0, max_h_degree_n1;
    std::vector<std::string> tight_steps;

    // Counting for the alternate-edge argument.
    std::optional<int> t, h0, h1, h2;
    std::optional<int> selected;           ///< |M'|
    std::optional<int> terminals;          ///< |A|
    std::optional<int> claim_a_violations;
    std::optional<int> claim_b_violations;
    std::optional<int> claim_c_violations;
    std::optional<int> max_x_degree;       ///< max over A of neighbors in H2
    std::optional<int> swaps;

    bound_factors bounds;
    std::vector<inequality> inequalities;

    bool asserted_hold() const;
    std::vector<std::string> failed_assertions() const;
};

/// Carries the full report of a run in which an asserted inequality failed.
class diagnostics_failure : public invariant_violation {
  public:
    explicit diagnostics_failure(diagnostics_report report);
    const diagnostics_report &report() const { return report_; }

  private:
    diagnostics_report report_;
};

/// Degree-class counting on a characteristic subgraph of `c`: the
/// N2 → N0 ∪ N1 degree caps, n2(δ-2) <= 4n0+2n1, and for triangle-free g
/// n2(δ-2) <= 2n0+n1, with the implied color-count bounds.
/// Throws diagnostics_failure if an asserted inequality fails.
diagnostics_report diagnostics_perfect_matching(const graph &g, const edge_coloring &c);

/// Alternate-edge counting: M' from each path, unselected count t, the set T
/// of left endpoints, δ-2 special edges per T-vertex, the H0/H1/H2 split,
/// t(δ-2) = 2h2+h1 and t(δ-1) <= n+h2. `m` must be a maximum matching.
/// Throws diagnostics_failure if an asserted inequality fails.
diagnostics_report diagnostics_general(const graph &g, const edge_coloring &c, const matching &m);

/// κ, applicable theorem flags and all bound factors for g (connected, δ >= 3).
diagnostics_report bound_report(const graph &g);

enum class verdict_status { pass, fail, skipped };
const char *to_string(verdict_status s);

struct ratio_verdict {
    verdict_status status = verdict_status::skipped;
    int alg = 0;
    std::optional<int> opt;
    std::uint64_t nodes_explored = 0;
    alg_run run;
    opt_result oracle;
    std::vector<inequality> checks;
};

/// OPT from the exact oracle against ALG, checking every applicable bound
/// in exact arithmetic. Oracle budget exhaustion yields `skipped`.
ratio_verdict check_ratio(const graph &g, std::optional<std::uint64_t> budget = std::nullopt);

std::string to_json(const diagnostics_report &r);
std::string to_json(const ratio_verdict &v);
std::string to_json(const characteristic_subgraph &chi);

} // namespace q2col
