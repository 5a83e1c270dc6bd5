#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "q2col/approx.hpp"
#include "q2col/errors.hpp"
#include "q2col/generators.hpp"

using namespace q2col;

namespace {

// Count components of g minus m that carry an edge, via union-find.
int oracle_components(const graph &g, const matching &m) {
    oracle::edge_list rest;
    for (const auto &e : g.edges())
        if (std::find(m.edges().begin(), m.edges().end(), e) == m.edges().end())
            rest.emplace_back(e.u, e.v);
    oracle::dsu d(g.vertex_count());
    for (auto [u, v] : rest)
        d.unite(u, v);
    std::set<int> roots;
    for (auto [u, v] : rest)
        roots.insert(d.find(u));
    return static_cast<int>(roots.size());
}

} // namespace

TEST_CASE("fixed instances") {
    auto k4 = oracle::complete(4);
    auto pm = matching::from_edges(k4, {{0, 1}, {2, 3}});
    auto r = color_with_matching(k4, pm);
    CHECK(r.alg_colors == 3);
    CHECK(r.component_count == 1);
    CHECK(run_algorithm(k4).alg_colors == 3);

    auto c4 = oracle::cycle(4);
    CHECK(color_with_matching(c4, matching::from_edges(c4, {{0, 1}, {2, 3}})).alg_colors == 4);

    // Any 2-edge matching of C5 leaves a 2-edge path and a single edge.
    auto c5 = run_algorithm(oracle::cycle(5));
    CHECK(c5.matching_used.size() == 2);
    CHECK(c5.component_count == 2);
    CHECK(c5.alg_colors == 4);

    auto pet = oracle::petersen();
    auto rp = run_algorithm(pet);
    CHECK(rp.matching_used.size() == 5);
    CHECK(rp.component_count == oracle_components(pet, rp.matching_used));
    CHECK(rp.alg_colors == 5 + rp.component_count);
}

TEST_CASE("preconditions") {
    auto p4 = oracle::path(4);
    auto k4 = oracle::complete(4);
    CHECK_THROWS_AS(color_with_matching(k4, matching::from_edges(k4, {})), precondition_error);
    CHECK_NOTHROW(color_with_matching(p4, matching::from_edges(p4, {{1, 2}})));
    CHECK_THROWS_AS(run_algorithm(graph::build(4, oracle::edge_list{{0, 1}, {2, 3}})), precondition_error);
    CHECK_THROWS_AS(run_algorithm(graph::build(1, oracle::edge_list{})), precondition_error);
}

TEST_CASE("output is valid and counts |M| plus components") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const int max_m = n * (n - 1) / 2;
        const int m = n - 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m - n + 2));
        auto g = oracle::random_connected(n, m, rng());
        auto r = run_algorithm(g);
        CHECK(validate_coloring(g, r.coloring).valid);
        CHECK(r.coloring.color_count() == r.alg_colors);
        CHECK(r.matching_used.size() == oracle::max_matching_size(g));
        CHECK(r.component_count == oracle_components(g, r.matching_used));
        CHECK(r.alg_colors == r.matching_used.size() + r.component_count);
    }
}

TEST_CASE("any maximal matching yields a valid coloring") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_connected(8, 7 + static_cast<int>(rng() % 15), rng());
        std::vector<edge> es = g.edges();
        std::shuffle(es.begin(), es.end(), rng);
        std::vector<bool> used(8);
        std::vector<edge> pick;
        for (const auto &e : es)
            if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
                used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
                pick.push_back(e);
            }
        auto m = matching::from_edges(g, pick);
        auto r = color_with_matching(g, m);
        CHECK(validate_coloring(g, r.coloring).valid);
        CHECK(r.alg_colors == m.size() + oracle_components(g, m));
    }
}

TEST_CASE("clique blow-up of K3,3 with both matchings") {
    auto inst = gen_blowup(gen_bipartite_regular(3, 3));
    REQUIRE(inst.g.vertex_count() == 18);
    auto cross = color_with_matching(inst.g, inst.cross);
    CHECK(inst.cross.size() == 9);
    CHECK(cross.component_count == 6);
    CHECK(cross.alg_colors == 15);
    auto inner = color_with_matching(inst.g, inst.inner);
    CHECK(inner.component_count == 1);
    CHECK(inner.alg_colors == 10);
}
