#include "q2col/exact.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <json.hpp>

namespace q2col {

const char *to_string(opt_status s) { return s == opt_status::exact ? "exact" : "unknown"; }

namespace {

constexpr std::size_t ix(vertex_t v) { return static_cast<std::size_t>(v); }

// ---------------------------------------------------------------------------
// Largest linear forest.

class linear_forest_search {
  public:
    linear_forest_search(const graph &g, std::uint64_t budget)
        : g_(g), budget_(budget), deg_(ix(g.vertex_count()), 0), parent_(ix(g.vertex_count())),
          size_(ix(g.vertex_count()), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
        target_ = g.vertex_count() - static_cast<int>(connected_components(g).size());
    }

    /// Returns the optimum, or nullopt if the budget ran out first.
    std::optional<int> run() {
        dfs(0, 0);
        if (aborted_)
            return std::nullopt;
        return best_;
    }

    int relaxation() const { return target_; }

  private:
    vertex_t find(vertex_t x) const {
        while (parent_[ix(x)] != x)
            x = parent_[ix(x)];
        return x;
    }

    void dfs(std::size_t pos, int taken) {
        if (aborted_ || best_ == target_)
            return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        best_ = std::max(best_, taken);
        if (pos == g_.edges().size())
            return;
        if (taken + static_cast<int>(g_.edges().size() - pos) <= best_)
            return;

        const auto &e = g_.edge_at(pos);
        if (deg_[ix(e.u)] < 2 && deg_[ix(e.v)] < 2) {
            vertex_t ru = find(e.u);
            vertex_t rv = find(e.v);
            if (ru != rv) {
                if (size_[ix(ru)] < size_[ix(rv)])
                    std::swap(ru, rv);
                parent_[ix(rv)] = ru;
                size_[ix(ru)] += size_[ix(rv)];
                ++deg_[ix(e.u)];
                ++deg_[ix(e.v)];
                dfs(pos + 1, taken + 1);
                --deg_[ix(e.u)];
                --deg_[ix(e.v)];
                size_[ix(ru)] -= size_[ix(rv)];
                parent_[ix(rv)] = rv;
            }
        }
        dfs(pos + 1, taken);
    }

    const graph &g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int best_ = 0;
    int target_ = 0;
    std::vector<int> deg_;
    std::vector<vertex_t> parent_;
    std::vector<int> size_;
};

// ---------------------------------------------------------------------------
// Branch and bound for OPT.

class opt_search {
  public:
    opt_search(const graph &g, std::optional<std::uint64_t> budget, int cap)
        : g_(g), budget_(budget), cap_(cap), n_(ix(g.vertex_count())), m_(g.edges().size()), pal_(n_),
          remdeg_(n_), assign_(m_, 0), incident_(n_) {
        order_.resize(m_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        auto key = [&](std::size_t i) {
            const auto &e = g.edge_at(i);
            return std::max(g.degree(e.u), g.degree(e.v));
        };
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
        for (std::size_t p = 0; p < m_; ++p) {
            const auto &e = g.edge_at(order_[p]);
            incident_[ix(e.u)].push_back(p);
            incident_[ix(e.v)].push_back(p);
        }
        for (vertex_t v = 0; v < g.vertex_count(); ++v)
            remdeg_[ix(v)] = g.degree(v);
    }

    opt_result run() {
        dfs(0);
        opt_result r;
        r.nodes_explored = nodes_;
        if (aborted_)
            return r;
        r.status = opt_status::exact;
        r.opt_colors = best_;
        r.witness = edge_coloring::from_labels(g_, best_assign_);
        return r;
    }

  private:
    using palette = std::array<color_t, 2>; // 0 marks a free slot

    int free_slots(vertex_t v) const {
        const auto &p = pal_[ix(v)];
        return (p[0] == 0) + (p[1] == 0);
    }
    bool holds(vertex_t v, color_t a) const { return pal_[ix(v)][0] == a || pal_[ix(v)][1] == a; }
    static bool disjoint(const palette &a, const palette &b) {
        for (color_t x : a)
            if (x != 0 && (x == b[0] || x == b[1]))
                return false;
        return true;
    }

    // Minimum number of colors v must still adopt so that each of its
    // unassigned edges to a full vertex x finds a common color. 3 means infeasible.
    int forced_colors(vertex_t v, std::size_t from) const {
        auto &sets = scratch_;
        sets.clear();
        for (std::size_t p : incident_[ix(v)]) {
            if (p < from)
                continue;
            vertex_t x = g_.edge_at(order_[p]).other(v);
            if (free_slots(x) == 0 && disjoint(pal_[ix(x)], pal_[ix(v)]))
                sets.push_back(pal_[ix(x)]);
        }
        if (sets.empty())
            return 0;
        auto all_hit = [&](color_t a, color_t b) {
            return std::all_of(sets.begin(), sets.end(),
                               [&](const palette &s) { return s[0] == a || s[1] == a || s[0] == b || s[1] == b; });
        };
        for (color_t a : sets.front())
            if (all_hit(a, a))
                return 1;
        for (color_t a : sets.front()) {
            for (const auto &s : sets) {
                if (s[0] == a || s[1] == a)
                    continue;
                for (color_t b : s)
                    if (all_hit(a, b))
                        return 2;
                break;
            }
        }
        return 3;
    }

    // Optimistic number of classes still openable from position `pos`, or -1 if infeasible.
    int optimistic_new(std::size_t pos) const {
        int capacity = 0;
        for (vertex_t v = 0; v < static_cast<vertex_t>(n_); ++v) {
            if (remdeg_[ix(v)] == 0)
                continue;
            int f = free_slots(v);
            if (f == 0)
                continue;
            int forced = forced_colors(v, pos);
            if (forced > f)
                return -1;
            int openers = 0;
            for (std::size_t p : incident_[ix(v)])
                if (p >= pos && free_slots(g_.edge_at(order_[p]).other(v)) > 0)
                    ++openers;
            capacity += std::min(f - forced, openers);
        }
        return std::min(capacity / 2, static_cast<int>(m_ - pos));
    }

    // Every unassigned edge at v needs a common color or a free slot on a side.
    bool edges_still_colorable(vertex_t v, std::size_t from) const {
        for (std::size_t p : incident_[ix(v)]) {
            if (p < from)
                continue;
            const auto &e = g_.edge_at(order_[p]);
            if (free_slots(e.u) == 0 && free_slots(e.v) == 0 && disjoint(pal_[ix(e.u)], pal_[ix(e.v)]))
                return false;
        }
        return true;
    }

    bool add_color(vertex_t v, color_t a) {
        auto &p = pal_[ix(v)];
        if (p[0] == a || p[1] == a)
            return false;
        (p[0] == 0 ? p[0] : p[1]) = a;
        return true;
    }
    void drop_color(vertex_t v, color_t a) {
        auto &p = pal_[ix(v)];
        (p[1] == a ? p[1] : p[0]) = 0;
    }

    void try_color(std::size_t pos, vertex_t u, vertex_t v, color_t a) {
        bool added_u = add_color(u, a);
        bool added_v = add_color(v, a);
        --remdeg_[ix(u)];
        --remdeg_[ix(v)];
        assign_[order_[pos]] = a;
        if (edges_still_colorable(u, pos + 1) && edges_still_colorable(v, pos + 1))
            dfs(pos + 1);
        assign_[order_[pos]] = 0;
        ++remdeg_[ix(u)];
        ++remdeg_[ix(v)];
        if (added_v)
            drop_color(v, a);
        if (added_u)
            drop_color(u, a);
    }

    void dfs(std::size_t pos) {
        if (aborted_)
            return;
        if (budget_ && nodes_ >= *budget_) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        if (pos == m_) {
            if (classes_ > best_ || best_assign_.empty()) {
                best_ = classes_;
                best_assign_ = assign_;
            }
            return;
        }
        int extra = optimistic_new(pos);
        if (extra < 0)
            return;
        int bound = std::min(classes_ + extra, cap_);
        if (!best_assign_.empty() && bound <= best_)
            return;

        const auto &e = g_.edge_at(order_[pos]);
        const vertex_t u = e.u, v = e.v;
        if (free_slots(u) > 0 && free_slots(v) > 0) {
            ++classes_;
            try_color(pos, u, v, classes_);
            --classes_;
        }
        // Colors already at an endpoint first, then classes that live elsewhere.
        std::array<color_t, 4> cand{pal_[ix(u)][0], pal_[ix(u)][1], pal_[ix(v)][0], pal_[ix(v)][1]};
        for (std::size_t i = 0; i < cand.size(); ++i) {
            color_t a = cand[i];
            if (a == 0 || std::find(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(i), a) !=
                              cand.begin() + static_cast<std::ptrdiff_t>(i))
                continue;
            if ((holds(u, a) || free_slots(u) > 0) && (holds(v, a) || free_slots(v) > 0))
                try_color(pos, u, v, a);
        }
        if (free_slots(u) > 0 && free_slots(v) > 0)
            for (color_t a = 1; a <= classes_; ++a)
                if (!holds(u, a) && !holds(v, a))
                    try_color(pos, u, v, a);
    }

    const graph &g_;
    std::optional<std::uint64_t> budget_;
    int cap_;
    std::size_t n_, m_;
    std::vector<palette> pal_;
    std::vector<int> remdeg_;
    std::vector<color_t> assign_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> incident_; ///< search positions of edges at each vertex
    mutable std::vector<palette> scratch_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int classes_ = 0;
    int best_ = 0;
    std::vector<color_t> best_assign_;
};

} // namespace

int upper_bound_path_packing(const graph &g) {
    if (g.min_degree() < 3)
        throw precondition_error("path-packing bound requires minimum degree >= 3");
    linear_forest_search search(g, 2'000'000);
    return search.run().value_or(search.relaxation());
}

opt_result exact_opt(const graph &g, std::optional<std::uint64_t> node_budget) {
    if (!is_connected(g))
        throw precondition_error("exact_opt requires a connected graph");
    int cap = g.edge_count();
    if (g.vertex_count() > 0 && g.min_degree() >= 3)
        cap = std::min(cap, upper_bound_path_packing(g));
    return opt_search(g, node_budget, cap).run();
}

int naive_opt(const graph &g) {
    const auto m = g.edges().size();
    if (m > 12)
        throw precondition_error("naive_opt is limited to 12 edges");
    std::vector<std::vector<color_t>> pal(ix(g.vertex_count()));
    int best = 0;

    auto fits = [](const std::vector<color_t> &p, color_t a) {
        return std::find(p.begin(), p.end(), a) != p.end() || p.size() < 2;
    };
    // Restricted growth string: edge i takes a class in 1..k or opens k+1.
    auto rec = [&](auto &self, std::size_t i, int k) -> void {
        if (i == m) {
            best = std::max(best, k);
            return;
        }
        const auto &e = g.edge_at(i);
        auto &pu = pal[ix(e.u)];
        auto &pv = pal[ix(e.v)];
        for (color_t a = 1; a <= k + 1; ++a) {
            if (!fits(pu, a) || !fits(pv, a))
                continue;
            bool add_u = std::find(pu.begin(), pu.end(), a) == pu.end();
            bool add_v = std::find(pv.begin(), pv.end(), a) == pv.end();
            if (add_u)
                pu.push_back(a);
            if (add_v)
                pv.push_back(a);
            self(self, i + 1, std::max(k, static_cast<int>(a)));
            if (add_v)
                pv.pop_back();
            if (add_u)
                pu.pop_back();
        }
    };
    rec(rec, 0, 0);
    return best;
}

std::string opt_result_json(const opt_result &r) {
    nlohmann::ordered_json j;
    if (r.status == opt_status::exact)
        j["opt"] = r.opt_colors;
    else
        j["opt"] = nullptr;
    j["nodes_explored"] = r.nodes_explored;
    j["status"] = to_string(r.status);
    return j.dump();
}

} // namespace q2col
