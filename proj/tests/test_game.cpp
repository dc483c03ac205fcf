#include <doctest.h>

#include <random>

#include "aop/game.hpp"
#include "aop/oracle.hpp"

using namespace aop;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Independent oracle: enumerate all 2^|E| orientations and look for an
// acyclic T-odd one. Only usable on very small edge sets.
bool exists_by_orientation_enumeration(const Instance& inst) {
    const auto& edges = inst.graph.edges();
    int m = static_cast<int>(edges.size());
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (int k = 0; k < m; ++k) {
            auto [u, v] = edges[k];
            if ((mask >> k) & 1)
                arcs.emplace_back(v, u);
            else
                arcs.emplace_back(u, v);
        }
        if (validate_orientation(inst, Orientation(std::move(arcs))).ok()) return true;
    }
    return false;
}

Graph random_graph(int n, int max_edges, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    int m = static_cast<int>(rng() % (std::min<size_t>(all.size(), max_edges) + 1));
    all.resize(m);
    return Graph(n, std::move(all));
}

}  // namespace

TEST_CASE("validate_elimination_order on the spec examples") {
    Instance edge(Graph(2, {{0, 1}}), {1});
    CHECK(validate_elimination_order(edge, {{0, 1}}).valid);
    PlayCheck bad = validate_elimination_order(edge, {{1, 0}});
    CHECK_FALSE(bad.valid);
    CHECK(bad.first_violation == 0);

    Instance tri(triangle(), {0});
    CHECK(validate_elimination_order(tri, {{1, 0, 2}}).valid);
    CHECK_FALSE(validate_elimination_order(tri, {{0, 1, 2}}).valid);

    // Not a permutation.
    CHECK_FALSE(validate_elimination_order(tri, {{0, 0, 1}}).valid);
}

TEST_CASE("order_to_orientation") {
    Instance edge(Graph(2, {{0, 1}}), {1});
    CHECK(order_to_orientation(edge, {{0, 1}}) == Orientation({{0, 1}}));
    CHECK_THROWS_AS(order_to_orientation(edge, {{1, 0}}), InvalidPlay);

    Instance tri(triangle(), {0});
    Orientation o = order_to_orientation(tri, {{1, 0, 2}});
    CHECK(o == Orientation({{1, 0}, {1, 2}, {0, 2}}));
    std::vector<int> indeg = in_degrees(3, o);
    CHECK(indeg == std::vector<int>{1, 0, 2});
}

TEST_CASE("orientation_to_order") {
    Instance edge(Graph(2, {{0, 1}}), {1});
    CHECK(orientation_to_order(edge, Orientation({{0, 1}})).order == std::vector<int>{0, 1});

    Instance tri(triangle(), {0});
    EliminationOrder ord = orientation_to_order(tri, Orientation({{1, 0}, {1, 2}, {0, 2}}));
    CHECK(ord.order == std::vector<int>{1, 0, 2});

    Instance tri_any(triangle(), {0, 1, 2});
    CHECK_THROWS_AS(orientation_to_order(tri_any, Orientation({{0, 1}, {1, 2}, {2, 0}})), NotAcyclic);
    CHECK_THROWS_AS(orientation_to_order(tri, Orientation({{0, 1}, {1, 2}, {0, 2}})), NotTOdd);
}

TEST_CASE("in-degree equals the earlier-removed neighbor count") {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 80) {
        Graph g = random_graph(7, 12, rng);
        uint32_t t_mask = static_cast<uint32_t>(rng()) & 0x7f;
        Instance inst(g, mask_to_set(7, t_mask));
        auto witness = decide_exists(inst);
        if (!witness) continue;
        ++done;
        Orientation o = order_to_orientation(inst, *witness);
        std::vector<int> indeg = in_degrees(7, o);
        std::vector<int> pos(7);
        for (int i = 0; i < 7; ++i) pos[witness->order[i]] = i;
        for (int v = 0; v < 7; ++v) {
            int earlier = 0;
            for (int w : g.neighbors(v))
                if (pos[w] < pos[v]) ++earlier;
            CHECK(indeg[v] == earlier);
        }
    }
}

TEST_CASE("round trips are identities on orientations") {
    std::mt19937_64 rng(9);
    int done = 0;
    while (done < 80) {
        Graph g = random_graph(7, 12, rng);
        uint32_t t_mask = static_cast<uint32_t>(rng()) & 0x7f;
        Instance inst(g, mask_to_set(7, t_mask));
        auto witness = decide_exists(inst);
        if (!witness) continue;
        ++done;
        Orientation o = order_to_orientation(inst, *witness);
        EliminationOrder ord = orientation_to_order(inst, o);
        CHECK(order_to_orientation(inst, ord) == o);
    }
}

TEST_CASE("game equivalence against orientation enumeration") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 120; ++it) {
        Graph g = random_graph(6, 8, rng);
        uint32_t t_mask = static_cast<uint32_t>(rng()) & 0x3f;
        Instance inst(g, mask_to_set(6, t_mask));
        bool via_orders = decide_exists(inst).has_value();
        bool via_orientations = exists_by_orientation_enumeration(inst);
        CHECK(via_orders == via_orientations);
    }
}

TEST_CASE("game state flips colors by removed neighbors") {
    Instance tri(triangle(), {0});
    GameState state(tri);
    CHECK(state.black(0));
    CHECK(state.can_remove(1));
    CHECK_THROWS_AS(state.remove(0), InvalidPlay);
    state.remove(1);
    CHECK(state.can_remove(0));  // one removed neighbor flipped it white
    CHECK(state.black(2));
    state.remove(0);
    CHECK(state.can_remove(2));
    state.remove(2);
    CHECK(state.remaining() == 0);
}
