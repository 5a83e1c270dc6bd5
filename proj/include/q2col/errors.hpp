#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace q2col {

enum class graph_errc {
    negative_vertex_count,
    vertex_out_of_range,
    self_loop,
    duplicate_edge,
    missing_edge,
    partial_coloring,
    not_a_matching,
};

const char *to_string(graph_errc code);

/// Raised when a graph, coloring or matching cannot be constructed.
class graph_error : public std::invalid_argument {
  public:
    graph_error(graph_errc code, const std::string &what)
        : std::invalid_argument(what), code_(code) {}
    graph_errc code() const noexcept { return code_; }

  private:
    graph_errc code_;
};

/// Raised by the text readers; line numbers are 1-based.
class parse_error : public std::runtime_error {
  public:
    parse_error(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// An operation was called outside its domain (disconnected input, δ too small, ...).
class precondition_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A proven inequality or structural invariant failed on a concrete instance.
/// Seeing one means either the implementation or the underlying theorem is wrong.
class invariant_violation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace q2col
