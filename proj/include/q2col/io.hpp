#pragma once

#include <iosfwd>
#include <string>

#include "q2col/graph.hpp"
#include "q2col/matching.hpp"

namespace q2col::io {

// Edge-list format: "n m" then m lines "u v" with u < v; '#' lines are comments.
graph read_graph(std::istream &in);
void write_graph(std::ostream &out, const graph &g);

// Coloring format: one line "u v c" per edge, canonical edge order.
edge_coloring read_coloring(std::istream &in, const graph &g);
void write_coloring(std::ostream &out, const graph &g, const edge_coloring &c);

// Matching format: one line "u v" per matched edge, canonical order.
matching read_matching(std::istream &in, const graph &g);
void write_matching(std::ostream &out, const matching &m);

graph load_graph(const std::string &path);
edge_coloring load_coloring(const std::string &path, const graph &g);
matching load_matching(const std::string &path, const graph &g);

std::string to_string(const graph &g);
std::string to_string(const graph &g, const edge_coloring &c);
std::string to_string(const matching &m);

} // namespace q2col::io
