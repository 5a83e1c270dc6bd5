#include "q2col/matching.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace q2col {

matching matching::from_edges(const graph &g, std::vector<edge> edges) {
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    for (auto &e : edges) {
        e = make_edge(e.u, e.v);
        if (!g.edge_index(e))
            throw graph_error(graph_errc::missing_edge, "matching edge (" + std::to_string(e.u) + "," +
                                                            std::to_string(e.v) + ") is not in the graph");
        for (vertex_t x : {e.u, e.v}) {
            if (used[static_cast<std::size_t>(x)])
                throw graph_error(graph_errc::not_a_matching,
                                  "vertex " + std::to_string(x) + " is covered twice");
            used[static_cast<std::size_t>(x)] = true;
        }
    }
    std::sort(edges.begin(), edges.end());
    matching m;
    m.edges_ = std::move(edges);
    return m;
}

std::vector<vertex_t> matching::mates(int vertex_count) const {
    std::vector<vertex_t> mate(static_cast<std::size_t>(vertex_count), -1);
    for (const auto &e : edges_) {
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    return mate;
}

namespace {

// Edmonds' algorithm: BFS over an alternating forest rooted at one free
// vertex, contracting odd cycles (blossoms) by relabeling their base.
class blossom_search {
  public:
    explicit blossom_search(const graph &g)
        : g_(g), n_(static_cast<std::size_t>(g.vertex_count())), mate_(n_, -1), parent_(n_), base_(n_),
          used_(n_), in_blossom_(n_) {}

    std::vector<vertex_t> run() {
        greedy_start();
        for (vertex_t root = 0; root < static_cast<vertex_t>(n_); ++root) {
            if (mate_[idx(root)] != -1)
                continue;
            vertex_t end = find_path(root);
            augment(end);
        }
        return mate_;
    }

  private:
    static std::size_t idx(vertex_t v) { return static_cast<std::size_t>(v); }

    void greedy_start() {
        for (vertex_t v = 0; v < static_cast<vertex_t>(n_); ++v) {
            if (mate_[idx(v)] != -1)
                continue;
            for (vertex_t w : g_.neighbors(v)) {
                if (mate_[idx(w)] == -1) {
                    mate_[idx(v)] = w;
                    mate_[idx(w)] = v;
                    break;
                }
            }
        }
    }

    vertex_t lca(vertex_t a, vertex_t b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[idx(a)];
            seen[idx(a)] = true;
            if (mate_[idx(a)] == -1)
                break;
            a = parent_[idx(mate_[idx(a)])];
        }
        for (;;) {
            b = base_[idx(b)];
            if (seen[idx(b)])
                return b;
            b = parent_[idx(mate_[idx(b)])];
        }
    }

    void mark_path(vertex_t v, vertex_t b, vertex_t child) {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = true;
            in_blossom_[idx(base_[idx(mate_[idx(v)])])] = true;
            parent_[idx(v)] = child;
            child = mate_[idx(v)];
            v = parent_[idx(mate_[idx(v)])];
        }
    }

    vertex_t find_path(vertex_t root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (std::size_t i = 0; i < n_; ++i)
            base_[i] = static_cast<vertex_t>(i);

        used_[idx(root)] = true;
        std::queue<vertex_t> q;
        q.push(root);
        while (!q.empty()) {
            vertex_t v = q.front();
            q.pop();
            for (vertex_t to : g_.neighbors(v)) {
                if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to)
                    continue;
                if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
                    vertex_t cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (in_blossom_[idx(base_[i])]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(static_cast<vertex_t>(i));
                            }
                        }
                    }
                } else if (parent_[idx(to)] == -1) {
                    parent_[idx(to)] = v;
                    if (mate_[idx(to)] == -1)
                        return to;
                    used_[idx(mate_[idx(to)])] = true;
                    q.push(mate_[idx(to)]);
                }
            }
        }
        return -1;
    }

    void augment(vertex_t v) {
        while (v != -1) {
            vertex_t pv = parent_[idx(v)];
            vertex_t ppv = mate_[idx(pv)];
            mate_[idx(v)] = pv;
            mate_[idx(pv)] = v;
            v = ppv;
        }
    }

    const graph &g_;
    std::size_t n_;
    std::vector<vertex_t> mate_;
    std::vector<vertex_t> parent_;
    std::vector<vertex_t> base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

} // namespace

matching maximum_matching(const graph &g) {
    auto mate = blossom_search(g).run();
    std::vector<edge> es;
    for (vertex_t v = 0; v < g.vertex_count(); ++v)
        if (mate[static_cast<std::size_t>(v)] > v)
            es.push_back(edge{v, mate[static_cast<std::size_t>(v)]});
    return matching::from_edges(g, std::move(es));
}

bool is_perfect(const graph &g, const matching &m) { return 2 * m.size() == g.vertex_count(); }

bool is_maximal(const graph &g, const matching &m) {
    auto mate = m.mates(g.vertex_count());
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const edge &e) {
        return mate[static_cast<std::size_t>(e.u)] != -1 || mate[static_cast<std::size_t>(e.v)] != -1;
    });
}

bool verify_maximality(const graph &g, const matching &m) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    auto mate = m.mates(g.vertex_count());
    std::vector<bool> on_path(n, false);

    // From `v`, reached by a matched edge (or v is the free start), try every
    // unmatched edge to an off-path vertex; a free endpoint closes an
    // augmenting path, a matched one continues through its mate.
    std::function<bool(vertex_t)> extend = [&](vertex_t v) -> bool {
        for (vertex_t w : g.neighbors(v)) {
            if (on_path[static_cast<std::size_t>(w)] || mate[static_cast<std::size_t>(v)] == w)
                continue;
            vertex_t w_mate = mate[static_cast<std::size_t>(w)];
            if (w_mate == -1)
                return true;
            if (on_path[static_cast<std::size_t>(w_mate)])
                continue;
            on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(w_mate)] = true;
            bool found = extend(w_mate);
            on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(w_mate)] = false;
            if (found)
                return true;
        }
        return false;
    };

    for (vertex_t s = 0; s < g.vertex_count(); ++s) {
        if (mate[static_cast<std::size_t>(s)] != -1)
            continue;
        on_path[static_cast<std::size_t>(s)] = true;
        bool found = extend(s);
        on_path[static_cast<std::size_t>(s)] = false;
        if (found)
            return false;
    }
    return true;
}

} // namespace q2col
