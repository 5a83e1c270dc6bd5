#include "q2col/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <json.hpp>

#include "q2col/approx.hpp"

namespace q2col {

namespace {

constexpr std::size_t ix(vertex_t v) { return static_cast<std::size_t>(v); }

// Portable draws: std distributions differ across standard libraries.
class rng {
  public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}
    std::size_t below(std::size_t k) { return static_cast<std::size_t>(engine_() % k); }
    template <class T> void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) { return splitmix64(base ^ splitmix64(index)); }

// ---------------------------------------------------------------------------

void check_tight1(const tight1_params &p) {
    const auto [kappa, delta, t] = p;
    if (kappa < 1 || delta < 1 || t < 1)
        throw feasibility_error("kappa, delta and t must be positive");
    if (!(kappa < delta - 3))
        throw feasibility_error("kappa < delta - 3 fails: " + std::to_string(kappa) + " >= " + std::to_string(delta - 3));
    const std::int64_t slack = delta + 1 - kappa;
    const std::int64_t sq = static_cast<std::int64_t>(delta - 1) * (delta - 1);
    if (!(static_cast<std::int64_t>(t) * slack > sq))
        throw feasibility_error("t > (delta-1)^2/(delta+1-kappa) fails: t=" + std::to_string(t) + ", bound " +
                                to_string(rational(sq, slack)));
    if ((static_cast<std::int64_t>(t) * slack) % (delta - 1) != 0)
        throw feasibility_error("h = t(delta+1-kappa)/(delta-1) - (delta-1) is not an integer: " +
                                to_string(rational(static_cast<std::int64_t>(t) * slack, delta - 1) - (delta - 1)));
    const std::int64_t h = static_cast<std::int64_t>(t) * slack / (delta - 1) - (delta - 1);
    if (h <= 0)
        throw feasibility_error("h must be positive, got " + std::to_string(h));
    if (h > t - delta)
        throw feasibility_error("h <= t - delta fails: h=" + std::to_string(h) + " but S2 has " +
                                std::to_string(t - delta) + " vertices");
}

std::optional<int> smallest_feasible_t(int kappa, int delta, int t_max) {
    for (int t = 1; t <= t_max; ++t) {
        try {
            check_tight1({kappa, delta, t});
            return t;
        } catch (const feasibility_error &) {
        }
    }
    return std::nullopt;
}

tight1_instance gen_tight1(const tight1_params &p) {
    check_tight1(p);
    const auto [kappa, delta, t] = p;
    tight1_instance inst;
    inst.params = p;
    inst.h = t * (delta + 1 - kappa) / (delta - 1) - (delta - 1);
    inst.alpha = (t - delta - inst.h + 1) * (delta - 1);
    const int h = inst.h;
    const int n = 2 * t + inst.alpha;
    auto s_vertex = [](int i) { return static_cast<vertex_t>(i); };      // S1 then S2
    auto a_vertex = [t](int i) { return static_cast<vertex_t>(t + i); };
    auto b_vertex = [t](int j) { return static_cast<vertex_t>(2 * t + j); };

    std::vector<std::pair<edge, color_t>> colored;
    std::vector<edge> matched;
    for (int i = 0; i < t; ++i) {
        colored.emplace_back(make_edge(a_vertex(i), s_vertex(i)), i + 1);
        matched.push_back(make_edge(a_vertex(i), s_vertex(i)));
    }
    for (int s = 0; s < delta; ++s) {
        for (int i = 0; i < t; ++i)
            if (i != s)
                colored.emplace_back(make_edge(a_vertex(i), s_vertex(s)), t + 1);
        for (int j = 0; j < inst.alpha; ++j)
            colored.emplace_back(make_edge(b_vertex(j), s_vertex(s)), t + 1);
    }
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < delta - 1; ++j)
            colored.emplace_back(make_edge(s_vertex(delta + i), b_vertex(j)), t + 2);
    for (int j = 1; j <= t - h - delta; ++j)
        for (int k = 0; k < delta - 1; ++k)
            colored.emplace_back(make_edge(s_vertex(delta + h + j - 1), b_vertex(j * (delta - 1) + k)), t + 2 + j);

    std::vector<edge> es;
    es.reserve(colored.size());
    for (const auto &[e, col] : colored)
        es.push_back(e);
    inst.g = graph::build(n, std::span<const edge>(es));
    inst.coloring = edge_coloring::from_assignment(inst.g, colored);
    inst.as_matching = matching::from_edges(inst.g, std::move(matched));
    inst.expected_colors = 2 * t - h - delta + 2;
    inst.target = t * (1 + rational(kappa - 2, delta - 1));
    return inst;
}

// ---------------------------------------------------------------------------

regular_base gen_bipartite_regular(int half, int d) {
    if (d < 1 || half < 1)
        throw feasibility_error("half and d must be positive");
    if (d > half)
        throw feasibility_error("d <= half fails: d=" + std::to_string(d) + ", half=" + std::to_string(half));
    std::vector<std::pair<edge, color_t>> colored;
    std::vector<edge> es;
    for (int j = 0; j < half; ++j) {
        for (int i = 0; i < d; ++i) {
            edge e = make_edge(j, half + (j + i) % half);
            colored.emplace_back(e, i + 1);
            es.push_back(e);
        }
    }
    regular_base base;
    base.d = d;
    base.g = graph::build(2 * half, std::span<const edge>(es));
    // from_assignment renumbers by first appearance; u_0's edges come first in offset order, so labels survive.
    base.coloring = edge_coloring::from_assignment(base.g, colored);
    return base;
}

blowup_instance gen_blowup(const regular_base &base) {
    const int d = base.d;
    const graph &b = base.g;
    if (d < 1 || b.vertex_count() == 0 || b.min_degree() != d || b.max_degree() != d)
        throw feasibility_error("base graph is not " + std::to_string(d) + "-regular");
    if (base.coloring.size() != static_cast<std::size_t>(b.edge_count()) || base.coloring.color_count() != d)
        throw feasibility_error("base coloring must use exactly d colors");
    for (const auto &p : palettes(b, base.coloring))
        if (static_cast<int>(p.size()) != d)
            throw feasibility_error("base coloring is not a proper edge coloring");

    std::vector<edge> cross_edges, f_edges;
    for (std::size_t k = 0; k < b.edges().size(); ++k) {
        const auto &e = b.edge_at(k);
        const int i = base.coloring.color_of(k);
        edge ce = make_edge(e.u * d + i - 1, e.v * d + i - 1);
        cross_edges.push_back(ce);
        if (i == d)
            f_edges.push_back(e);
    }
    if (d % 2 == 1) {
        if (!is_bipartite(b))
            throw feasibility_error("odd d needs a bipartite base graph");
        if (components_after_removal(b, f_edges).size() != 1)
            throw feasibility_error("odd d needs the base to stay connected without its color-d class");
    }

    std::vector<edge> es = cross_edges, inner;
    for (vertex_t v = 0; v < b.vertex_count(); ++v) {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                es.push_back(make_edge(v * d + i, v * d + j));
        for (int k = 0; 2 * k + 1 < d - (d % 2); ++k)
            inner.push_back(make_edge(v * d + 2 * k, v * d + 2 * k + 1));
    }
    if (d % 2 == 1)
        for (const auto &e : f_edges)
            inner.push_back(make_edge(e.u * d + d - 1, e.v * d + d - 1));

    blowup_instance inst;
    inst.d = d;
    inst.g = graph::build(b.vertex_count() * d, std::span<const edge>(es));
    inst.cross = matching::from_edges(inst.g, std::move(cross_edges));
    inst.inner = matching::from_edges(inst.g, std::move(inner));
    if (!is_perfect(inst.g, inst.inner))
        throw feasibility_error("inner matching is not perfect");
    if (components_after_removal(inst.g, inst.inner.edges()).size() != 1)
        throw feasibility_error("removing the inner matching disconnects the blow-up");
    return inst;
}

// ---------------------------------------------------------------------------

graph gen_random_min_degree(int n, int delta, std::uint64_t seed, bool triangle_free) {
    if (delta < 0 || n < 2)
        throw feasibility_error("need n >= 2 and delta >= 0");
    if (!(n > delta))
        throw feasibility_error("n > delta fails");
    if (triangle_free && n / 2 < delta)
        throw feasibility_error("bipartite instance needs floor(n/2) >= delta");

    rng r(seed);
    std::vector<vertex_t> perm(ix(n));
    std::iota(perm.begin(), perm.end(), 0);
    r.shuffle(perm);
    std::vector<int> side(ix(n), 0);
    const int left = (n + 1) / 2;
    std::vector<vertex_t> path;
    if (triangle_free) {
        for (int i = 0; i < n; ++i)
            side[ix(perm[ix(i)])] = i < left ? 0 : 1;
        for (int i = 0; i < left; ++i) {
            path.push_back(perm[ix(i)]);
            if (left + i < n)
                path.push_back(perm[ix(left + i)]);
        }
    } else {
        path = perm;
    }

    std::vector<std::vector<bool>> adj(ix(n), std::vector<bool>(ix(n), false));
    std::vector<int> deg(ix(n), 0);
    std::vector<edge> es;
    auto add = [&](vertex_t a, vertex_t b) {
        adj[ix(a)][ix(b)] = adj[ix(b)][ix(a)] = true;
        ++deg[ix(a)];
        ++deg[ix(b)];
        es.push_back(make_edge(a, b));
    };
    auto allowed = [&](vertex_t a, vertex_t b) {
        return a != b && !adj[ix(a)][ix(b)] && (!triangle_free || side[ix(a)] != side[ix(b)]);
    };
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        add(path[i], path[i + 1]);

    for (;;) {
        std::vector<vertex_t> deficient;
        for (vertex_t v = 0; v < n; ++v)
            if (deg[ix(v)] < delta)
                deficient.push_back(v);
        if (deficient.empty())
            break;
        int low = delta;
        for (vertex_t v : deficient)
            low = std::min(low, deg[ix(v)]);
        std::vector<vertex_t> lowest;
        for (vertex_t v : deficient)
            if (deg[ix(v)] == low)
                lowest.push_back(v);
        vertex_t v = lowest[r.below(lowest.size())];
        std::vector<vertex_t> preferred, fallback;
        for (vertex_t w = 0; w < n; ++w) {
            if (!allowed(v, w))
                continue;
            (deg[ix(w)] < delta ? preferred : fallback).push_back(w);
        }
        auto &pool = preferred.empty() ? fallback : preferred;
        add(v, pool[r.below(pool.size())]);
    }

    const std::size_t extra = r.below(ix(n) + 1);
    for (std::size_t k = 0; k < extra; ++k) {
        vertex_t a = static_cast<vertex_t>(r.below(ix(n)));
        vertex_t b = static_cast<vertex_t>(r.below(ix(n)));
        if (allowed(a, b))
            add(a, b);
    }
    return graph::build(n, std::span<const edge>(es));
}

edge_coloring gen_random_coloring(const graph &g, std::uint64_t seed) {
    rng r(seed);
    const auto m = g.edges().size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});

    auto merge_some = [&](std::vector<color_t> labels, int colors) {
        // Merging two classes never breaks the vertex constraint.
        const std::size_t merges = r.below(3);
        for (std::size_t k = 0; k < merges && colors > 1; ++k) {
            auto a = static_cast<color_t>(1 + r.below(ix(colors)));
            auto b = static_cast<color_t>(1 + r.below(ix(colors)));
            for (auto &l : labels)
                if (l == b)
                    l = a;
        }
        return edge_coloring::from_labels(g, std::move(labels));
    };

    for (int attempt = 0; attempt < 200; ++attempt) {
        r.shuffle(order);
        std::vector<color_t> labels(m, 0);
        std::vector<std::vector<color_t>> pal(ix(g.vertex_count()));
        int colors = 0;
        bool dead = false;
        for (std::size_t idx : order) {
            const auto &e = g.edge_at(idx);
            auto &pu = pal[ix(e.u)];
            auto &pv = pal[ix(e.v)];
            std::vector<color_t> options;
            if (pu.size() < 2 && pv.size() < 2 && r.below(3) != 0)
                options.push_back(colors + 1);
            for (color_t a = 1; a <= colors; ++a) {
                bool fu = std::find(pu.begin(), pu.end(), a) != pu.end() || pu.size() < 2;
                bool fv = std::find(pv.begin(), pv.end(), a) != pv.end() || pv.size() < 2;
                if (fu && fv)
                    options.push_back(a);
            }
            if (options.empty() && pu.size() < 2 && pv.size() < 2)
                options.push_back(colors + 1);
            if (options.empty()) {
                dead = true;
                break;
            }
            color_t a = options[r.below(options.size())];
            colors = std::max(colors, a);
            labels[idx] = a;
            if (std::find(pu.begin(), pu.end(), a) == pu.end())
                pu.push_back(a);
            if (std::find(pv.begin(), pv.end(), a) == pv.end())
                pv.push_back(a);
        }
        if (!dead)
            return merge_some(std::move(labels), colors);
    }

    // Fallback: matching-based coloring from a random maximal matching.
    r.shuffle(order);
    std::vector<bool> covered(ix(g.vertex_count()), false);
    std::vector<edge> mm;
    for (std::size_t idx : order) {
        const auto &e = g.edge_at(idx);
        if (!covered[ix(e.u)] && !covered[ix(e.v)]) {
            covered[ix(e.u)] = covered[ix(e.v)] = true;
            mm.push_back(e);
        }
    }
    auto run = color_with_matching(g, matching::from_edges(g, std::move(mm)));
    return merge_some(run.coloring.colors(), run.coloring.color_count());
}

// ---------------------------------------------------------------------------

std::string provenance_json(const tight1_instance &inst) {
    const auto &p = inst.params;
    nlohmann::ordered_json j;
    j["family"] = "tight1";
    j["params"] = {{"kappa", p.kappa}, {"delta", p.delta}, {"t", p.t}};
    j["formulas_evaluated"] = {{"h", inst.h},
                               {"alpha", inst.alpha},
                               {"n", inst.g.vertex_count()},
                               {"colors", inst.expected_colors},
                               {"target", to_string(inst.target)}};
    j["vertex_blocks"] = {{"S1", {0, p.delta}},
                          {"S2", {p.delta, p.t}},
                          {"A", {p.t, 2 * p.t}},
                          {"B", {2 * p.t, 2 * p.t + inst.alpha}}};
    return j.dump();
}

std::string provenance_json(const blowup_instance &inst, int half) {
    const int n_prime = inst.g.vertex_count();
    nlohmann::ordered_json j;
    j["family"] = "blowup";
    j["params"] = {{"d", inst.d}, {"half", half}};
    j["formulas_evaluated"] = {{"n_prime", n_prime},
                               {"cross_alg", n_prime / 2 + n_prime / inst.d},
                               {"inner_alg", n_prime / 2 + 1},
                               {"cross_formula", to_string(rational(n_prime, 2) * (1 + rational(2, inst.d)))}};
    j["vertex_blocks"] = {{"clique_of_base_vertex_v", "[v*d, v*d + d)"}};
    return j.dump();
}

} // namespace q2col
