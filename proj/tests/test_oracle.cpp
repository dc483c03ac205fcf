#include <doctest.h>

#include <random>

#include "aop/classes.hpp"
#include "aop/families.hpp"
#include "aop/oracle.hpp"

using namespace aop;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

bool exists_by_orientation_enumeration(const Instance& inst) {
    const auto& edges = inst.graph.edges();
    int m = static_cast<int>(edges.size());
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (int k = 0; k < m; ++k) {
            auto [u, v] = edges[k];
            arcs.emplace_back((mask >> k) & 1 ? v : u, (mask >> k) & 1 ? u : v);
        }
        if (validate_orientation(inst, Orientation(std::move(arcs))).ok()) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("completeness against orientation enumeration on all small classes") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : nonisomorphic_graphs(n)) {
            if (g.edge_count() > 8) continue;
            SubsetSolver solver(g);
            for (uint32_t t = 0; t < (1u << n); ++t) {
                Instance inst(g, mask_to_set(n, t));
                CHECK(solver.solvable(t) == exists_by_orientation_enumeration(inst));
            }
        }
    }
}

TEST_CASE("decide_exists on the spec examples") {
    Instance tri(triangle(), {1});
    auto w = decide_exists(tri);
    REQUIRE(w.has_value());
    CHECK(validate_elimination_order(tri, *w).valid);

    Graph c4 = build_family(FamilySpec::cycle(4)).graph;
    CHECK_FALSE(decide_exists(Instance(c4, {0, 1, 2, 3})).has_value());

    Instance single(Graph(1, {}), std::vector<int>{});
    auto w1 = decide_exists(single);
    REQUIRE(w1.has_value());
    CHECK(w1->order == std::vector<int>{0});
}

TEST_CASE("decide_exists respects the vertex cap") {
    Graph big = build_family(FamilySpec::grid(5, 5)).graph;
    OracleOptions tight;
    tight.vertex_cap = 24;
    CHECK_THROWS_AS(decide_exists(Instance(big, std::vector<int>{}), tight), TooLarge);
    OracleOptions loose;
    loose.vertex_cap = 25;
    CHECK(decide_exists(Instance(big, std::vector<int>{}), loose).has_value());
}

TEST_CASE("witnesses are always valid plays") {
    std::mt19937_64 rng(31);
    Graph g = build_family(FamilySpec::cylinder(3, 3)).graph;
    SubsetSolver solver(g);
    for (uint32_t t = 0; t < (1u << 9); ++t) {
        auto order = solver.find_order(t);
        if (!order) continue;
        Instance inst(g, mask_to_set(9, t));
        CHECK(validate_elimination_order(inst, {*order}).valid);
    }
}

TEST_CASE("single-worker runs are reproducible") {
    Graph g = build_family(FamilySpec::grid(3, 3)).graph;
    SubsetSolver solver(g);
    auto a = solver.find_order(0);
    auto b = solver.find_order(0);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}

TEST_CASE("enumerate_condition_sets on the spec examples") {
    // Single vertex, N = {P}: only the empty set.
    CHECK(condition_sets(Graph(1, {}), ConditionSet::only_p()) == std::vector<uint32_t>{0});
    // Single edge, N = {P}: exactly the two singletons.
    CHECK(condition_sets(Graph(2, {{0, 1}}), ConditionSet::only_p()) == std::vector<uint32_t>{1, 2});
    // Triangle, N = {P,S}: the three singletons.
    CHECK(condition_sets(triangle(), {true, true, false}) == std::vector<uint32_t>{1, 2, 4});
}

TEST_CASE("enumeration is consistent with the instance-level checks") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 20; ++it) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(5, std::move(edges));
        for (int bits = 1; bits <= 7; ++bits) {
            ConditionSet n = ConditionSet::from_bits(bits);
            std::vector<uint32_t> got = condition_sets(g, n);
            std::vector<uint32_t> expected;
            for (uint32_t t = 0; t < 32; ++t)
                if (satisfies_conditions(Instance(g, mask_to_set(5, t)), n)) expected.push_back(t);
            CHECK(got == expected);
        }
    }
}

TEST_CASE("class membership on the spec examples") {
    // Single edge is in C_P.
    MembershipReport edge = class_membership_small(Graph(2, {{0, 1}}), ConditionSet::only_p());
    CHECK(edge.member);
    CHECK(edge.checked_count == 2);

    // Triangle is not in C_P; T = V is the counterexample.
    MembershipReport tri = class_membership_small(triangle(), ConditionSet::only_p());
    CHECK_FALSE(tri.member);
    REQUIRE(tri.counterexample.has_value());
    CHECK(tri.counterexample->target.count() == 3);

    // Two isolated vertices are in C_S.
    MembershipReport iso = class_membership_small(Graph(2, {}), {false, true, false});
    CHECK(iso.member);
}

TEST_CASE("state space stays within 2^n") {
    Graph g = build_family(FamilySpec::grid(2, 3)).graph;
    SubsetSolver solver(g);
    int solvable = 0;
    for (uint32_t t = 0; t < (1u << 6); ++t) solvable += solver.solvable(t);
    CHECK(solvable > 0);
    CHECK(solvable < 64);
}
