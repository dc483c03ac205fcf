#include <doctest.h>

#include <random>

#include "aop/classes.hpp"
#include "aop/core.hpp"
#include "aop/families.hpp"
#include "aop/game.hpp"

using namespace aop;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph random_graph(int n, std::mt19937_64& rng, double edge_prob = 0.5) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(edge_prob);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("graph construction rejects loops, duplicates and bad endpoints") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidParameters);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidParameters);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidParameters);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.degree(0) == 2);
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
}

TEST_CASE("parity condition P") {
    CHECK(parity_condition_p(Instance(path3(), {0, 2})));
    CHECK(parity_condition_p(Instance(Graph(1, {}), std::vector<int>{})));
    CHECK_FALSE(parity_condition_p(Instance(triangle(), {0, 1})));
    // P holds exactly when |T| and |E| have equal parity.
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        Graph g = random_graph(6, rng);
        uint32_t mask = static_cast<uint32_t>(rng() & 63);
        std::vector<int> t;
        for (int v = 0; v < 6; ++v)
            if ((mask >> v) & 1) t.push_back(v);
        Instance inst(g, t);
        CHECK(parity_condition_p(inst) ==
              ((g.edge_count() % 2) == (static_cast<int>(t.size()) % 2)));
    }
}

TEST_CASE("source and sink sets") {
    // 4-cycle, T = V: all degrees even and everything in T.
    Graph c4 = build_family(FamilySpec::cycle(4)).graph;
    auto [src1, snk1] = source_and_sink_sets(Instance(c4, {0, 1, 2, 3}));
    CHECK(src1.empty());
    CHECK(snk1.empty());
    // Single edge, T = {u}.
    auto [src2, snk2] = source_and_sink_sets(Instance(Graph(2, {{0, 1}}), {0}));
    CHECK(src2.to_vector() == std::vector<int>{1});
    CHECK(snk2.to_vector() == std::vector<int>{0});
    // 2x2 grid, T empty: all degree 2.
    Graph g22 = build_family(FamilySpec::grid(2, 2)).graph;
    auto [src3, snk3] = source_and_sink_sets(Instance(g22, std::vector<int>{}));
    CHECK(src3.count() == 4);
    CHECK(snk3.count() == 4);
}

TEST_CASE("source equals sink iff all degrees even") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(5 + static_cast<int>(it % 3), rng);
        uint32_t mask = static_cast<uint32_t>(rng()) & ((1u << g.vertex_count()) - 1);
        Instance inst(g, mask_to_set(g.vertex_count(), mask));
        auto [src, snk] = source_and_sink_sets(inst);
        CHECK((src == snk) == g.all_degrees_even());
    }
}

TEST_CASE("conditions S and Sbar") {
    // Single edge, T empty: S holds, Sbar does not.
    auto [s1, sbar1] = conditions_s_sbar(Instance(Graph(2, {{0, 1}}), std::vector<int>{}));
    CHECK(s1);
    CHECK_FALSE(sbar1);
    // Single vertex, T empty: the |V| = 1 escape clause.
    auto [s2, sbar2] = conditions_s_sbar(Instance(Graph(1, {}), std::vector<int>{}));
    CHECK(s2);
    CHECK(sbar2);
    // Cylinder C4 x P3 with T = everything except the boundary rows.
    Family cyl = build_family(FamilySpec::cylinder(4, 3));
    std::vector<int> middle = cyl.coords.row(1);
    auto [s3, sbar3] = conditions_s_sbar(Instance(cyl.graph, middle));
    CHECK(s3);
    CHECK_FALSE(sbar3);
}

TEST_CASE("validate_orientation") {
    Instance tri(triangle(), {0});
    ValidationReport cyclic = validate_orientation(tri, Orientation({{0, 1}, {1, 2}, {2, 0}}));
    CHECK_FALSE(cyclic.acyclic);
    CHECK(cyclic.cycle_witness.size() == 3);

    Instance edge(Graph(2, {{0, 1}}), {1});
    ValidationReport ok = validate_orientation(edge, Orientation({{0, 1}}));
    CHECK(ok.acyclic);
    CHECK(ok.t_odd);

    Instance p3(path3(), std::vector<int>{});
    ValidationReport ok2 = validate_orientation(p3, Orientation({{0, 1}, {2, 1}}));
    CHECK(ok2.acyclic);
    CHECK(ok2.t_odd);

    ValidationReport parity = validate_orientation(p3, Orientation({{0, 1}, {1, 2}}));
    CHECK(parity.acyclic);
    CHECK_FALSE(parity.t_odd);
    CHECK(parity.parity_witness >= 0);

    CHECK_THROWS_AS(validate_orientation(p3, Orientation({{0, 1}})), MismatchedEdgeSet);
    CHECK_THROWS_AS(validate_orientation(p3, Orientation({{0, 1}, {0, 2}})), MismatchedEdgeSet);
}

TEST_CASE("topological order is deterministic and validates") {
    CHECK(topological_order(2, Orientation({{0, 1}})) == std::vector<int>{0, 1});
    CHECK(topological_order(3, Orientation({{0, 1}, {0, 2}, {1, 2}})) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(topological_order(3, Orientation({{0, 1}, {1, 2}, {2, 0}})), CyclicOrientation);
}

TEST_CASE("cartesian product basics") {
    Graph p2(2, {{0, 1}});
    Graph c4 = cartesian_product(p2, p2);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    Graph k1(1, {});
    Graph g = build_family(FamilySpec::cycle(5)).graph;
    CHECK(cartesian_product(k1, g) == g);

    Graph prod = cartesian_product(build_family(FamilySpec::cycle(4)).graph,
                                   build_family(FamilySpec::path(5)).graph);
    CHECK(prod.vertex_count() == 20);
    CHECK(prod.edge_count() == 36);
}

TEST_CASE("cartesian product commutes up to the coordinate swap") {
    std::vector<Graph> smalls;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : nonisomorphic_graphs(n)) smalls.push_back(g);
    for (const Graph& g : smalls) {
        for (const Graph& h : smalls) {
            Graph gh = cartesian_product(g, h);
            Graph hg = cartesian_product(h, g);
            int q = h.vertex_count(), p = g.vertex_count();
            std::vector<std::pair<int, int>> remapped;
            for (auto [a, b] : gh.edges()) {
                auto swap_id = [&](int v) { return (v % q) * p + v / q; };
                remapped.emplace_back(swap_id(a), swap_id(b));
            }
            CHECK(Graph(p * q, remapped) == hg);
        }
    }
}

TEST_CASE("induced subgraph keeps a local-global map") {
    Graph g = build_family(FamilySpec::grid(3, 3)).graph;
    InducedSubgraph sub = induced_subgraph(g, {4, 1, 3, 0});
    CHECK(sub.to_global == std::vector<int>{0, 1, 3, 4});
    CHECK(sub.graph.vertex_count() == 4);
    CHECK(sub.graph.edge_count() == 4);  // the 2x2 corner induces a 4-cycle
    CHECK(sub.local_of(3) == 2);
    CHECK(sub.local_of(7) == -1);
}

TEST_CASE("accepted orientations tie in-degree parity to membership") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_graph(6, rng);
        // Orient by a random permutation: always acyclic.
        std::vector<int> perm(6);
        for (int i = 0; i < 6; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> pos(6);
        for (int i = 0; i < 6; ++i) pos[perm[i]] = i;
        std::vector<std::pair<int, int>> arcs;
        for (auto [u, v] : g.edges()) arcs.emplace_back(pos[u] < pos[v] ? u : v, pos[u] < pos[v] ? v : u);
        Orientation o(arcs);
        std::vector<int> indeg = in_degrees(6, o);
        std::vector<int> t;
        for (int v = 0; v < 6; ++v)
            if (indeg[v] % 2 == 1) t.push_back(v);
        Instance inst(g, t);
        ValidationReport report = validate_orientation(inst, o);
        CHECK(report.acyclic);
        CHECK(report.t_odd);
    }
}
