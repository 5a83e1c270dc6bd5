#pragma once

#include <string>

#include "q2col/graph.hpp"
#include "q2col/matching.hpp"

namespace q2col {

/// One run of the matching-based algorithm.
struct alg_run {
    matching matching_used;
    int component_count = 0; ///< components of G∖M that contain at least one edge
    edge_coloring coloring;
    int alg_colors = 0;      ///< |M| + component_count
};

/// Colors each edge of m with its own color 1..|m|, then gives every
/// edge-containing component of g∖m one fresh color |m|+1, |m|+2, ...
/// (components ordered by smallest vertex). Throws precondition_error if m
/// is not maximal in g; throws graph_error if m is not a matching of g.
alg_run color_with_matching(const graph &g, const matching &m);

/// color_with_matching(g, maximum_matching(g)). Requires g connected, n >= 2.
alg_run run_algorithm(const graph &g);

/// {n, m, matching_size, components, alg_colors} as a JSON object string.
std::string run_report_json(const graph &g, const alg_run &run);

} // namespace q2col
