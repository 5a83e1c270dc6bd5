#include "q2col/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <fstream>
#include <sstream>

namespace q2col::io {

namespace {

// Yields non-comment lines with their 1-based line numbers.
class line_reader {
  public:
    explicit line_reader(std::istream &in) : in_(in) {}

    bool next(std::string &line) {
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line.front() == '#')
                continue;
            return true;
        }
        return false;
    }
    std::size_t line_no() const { return line_no_; }

  private:
    std::istream &in_;
    std::size_t line_no_ = 0;
};

// Parses exactly `count` single-space separated nonnegative decimals.
std::vector<long long> parse_fields(const std::string &line, std::size_t count, std::size_t line_no) {
    std::vector<long long> out;
    const char *p = line.data();
    const char *end = line.data() + line.size();
    while (p < end) {
        long long value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || value < 0)
            throw parse_error(line_no, "expected a nonnegative integer in \"" + line + "\"");
        out.push_back(value);
        p = next;
        if (p < end) {
            if (*p != ' ')
                throw parse_error(line_no, "unexpected character in \"" + line + "\"");
            ++p;
        }
    }
    if (out.size() != count)
        throw parse_error(line_no, "expected " + std::to_string(count) + " fields, got " +
                                       std::to_string(out.size()));
    return out;
}

template <class T> T open_and(const std::string &path, auto &&fn) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return fn(in);
}

} // namespace

graph read_graph(std::istream &in) {
    line_reader lines(in);
    std::string line;
    if (!lines.next(line))
        throw parse_error(lines.line_no(), "missing header \"n m\"");
    auto header = parse_fields(line, 2, lines.line_no());
    const long long n = header[0];
    const long long m = header[1];
    if (n > std::numeric_limits<vertex_t>::max())
        throw parse_error(lines.line_no(), "vertex count too large");

    std::vector<edge> es;
    std::set<edge> seen;
    for (long long i = 0; i < m; ++i) {
        if (!lines.next(line))
            throw parse_error(lines.line_no(), "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto f = parse_fields(line, 2, lines.line_no());
        if (f[0] == f[1])
            throw parse_error(lines.line_no(), "self-loop at vertex " + std::to_string(f[0]));
        if (f[0] >= n || f[1] >= n)
            throw parse_error(lines.line_no(), "vertex out of range for n=" + std::to_string(n));
        if (f[0] > f[1])
            throw parse_error(lines.line_no(), "edge endpoints must satisfy u < v");
        edge e{static_cast<vertex_t>(f[0]), static_cast<vertex_t>(f[1])};
        if (!seen.insert(e).second)
            throw parse_error(lines.line_no(), "duplicate edge " + line);
        es.push_back(e);
    }
    if (lines.next(line))
        throw parse_error(lines.line_no(), "trailing data after " + std::to_string(m) + " edges");
    return graph::build(static_cast<int>(n), std::span<const edge>(es));
}

void write_graph(std::ostream &out, const graph &g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto &e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

edge_coloring read_coloring(std::istream &in, const graph &g) {
    line_reader lines(in);
    std::string line;
    std::vector<std::pair<edge, color_t>> assignment;
    while (lines.next(line)) {
        auto f = parse_fields(line, 3, lines.line_no());
        if (f[0] >= f[1] || f[1] >= g.vertex_count())
            throw parse_error(lines.line_no(), "invalid edge \"" + line + "\"");
        assignment.emplace_back(edge{static_cast<vertex_t>(f[0]), static_cast<vertex_t>(f[1])},
                                static_cast<color_t>(f[2]));
    }
    return edge_coloring::from_assignment(g, assignment);
}

void write_coloring(std::ostream &out, const graph &g, const edge_coloring &c) {
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        out << g.edge_at(i).u << ' ' << g.edge_at(i).v << ' ' << c.color_of(i) << '\n';
}

matching read_matching(std::istream &in, const graph &g) {
    line_reader lines(in);
    std::string line;
    std::vector<edge> es;
    while (lines.next(line)) {
        auto f = parse_fields(line, 2, lines.line_no());
        if (f[0] >= f[1] || f[1] >= g.vertex_count())
            throw parse_error(lines.line_no(), "invalid edge \"" + line + "\"");
        es.push_back(edge{static_cast<vertex_t>(f[0]), static_cast<vertex_t>(f[1])});
    }
    return matching::from_edges(g, std::move(es));
}

void write_matching(std::ostream &out, const matching &m) {
    for (const auto &e : m.edges())
        out << e.u << ' ' << e.v << '\n';
}

graph load_graph(const std::string &path) {
    return open_and<graph>(path, [](std::istream &in) { return read_graph(in); });
}

edge_coloring load_coloring(const std::string &path, const graph &g) {
    return open_and<edge_coloring>(path, [&](std::istream &in) { return read_coloring(in, g); });
}

matching load_matching(const std::string &path, const graph &g) {
    return open_and<matching>(path, [&](std::istream &in) { return read_matching(in, g); });
}

std::string to_string(const graph &g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

std::string to_string(const graph &g, const edge_coloring &c) {
    std::ostringstream os;
    write_coloring(os, g, c);
    return os.str();
}

std::string to_string(const matching &m) {
    std::ostringstream os;
    write_matching(os, m);
    return os.str();
}

} // namespace q2col::io
