#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "q2col/graph.hpp"

namespace q2col {

enum class opt_status { exact, unknown };

struct opt_result {
    opt_status status = opt_status::unknown;
    int opt_colors = 0;           ///< meaningful only when status == exact
    edge_coloring witness;        ///< valid, opt_colors colors; empty when unknown
    std::uint64_t nodes_explored = 0;
};

/// OPT(g) by branch and bound over edges (max endpoint degree descending),
/// each edge joining an existing color class or opening the next label.
/// Returns status unknown once node_budget search nodes are spent; the
/// search never reports a best-so-far value as optimal. Requires g connected.
opt_result exact_opt(const graph &g, std::optional<std::uint64_t> node_budget = std::nullopt);

/// Edges in a largest spanning linear forest (max degree <= 2, acyclic).
/// For min degree >= 3 this bounds OPT from above. Exact search up to an
/// internal node budget, then falls back to n - #components.
/// Throws precondition_error when min degree < 3.
int upper_bound_path_packing(const graph &g);

/// Exhaustive enumeration of all partitions of E(g) (restricted growth
/// strings, canonical edge order) keeping those where every vertex touches
/// at most two classes. Throws precondition_error when m > 12.
int naive_opt(const graph &g);

/// {opt, nodes_explored, status}
std::string opt_result_json(const opt_result &r);

const char *to_string(opt_status s);

} // namespace q2col
