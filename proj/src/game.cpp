#include "aop/game.hpp"

#include <algorithm>

namespace aop {

GameState::GameState(const Instance& inst)
    : inst_(&inst),
      removed_(inst.graph.vertex_count()),
      flips_(inst.graph.vertex_count(), 0),
      remaining_(inst.graph.vertex_count()) {}

void GameState::remove(int v) {
    if (!can_remove(v)) throw InvalidPlay();
    removed_.set(v);
    --remaining_;
    for (int w : inst_->graph.neighbors(v)) ++flips_[w];
}

namespace {

bool is_permutation_of_vertices(int n, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

PlayCheck validate_elimination_order(const Instance& inst, const EliminationOrder& ord) {
    int n = inst.graph.vertex_count();
    if (!is_permutation_of_vertices(n, ord.order)) return {false, 0};
    GameState state(inst);
    for (size_t i = 0; i < ord.order.size(); ++i) {
        int v = ord.order[i];
        if (!state.can_remove(v)) return {false, static_cast<int>(i)};
        state.remove(v);
    }
    return {true, -1};
}

Orientation order_to_orientation(const Instance& inst, const EliminationOrder& ord) {
    if (!validate_elimination_order(inst, ord).valid) throw InvalidPlay();
    int n = inst.graph.vertex_count();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[ord.order[i]] = i;
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(inst.graph.edge_count());
    for (auto [u, v] : inst.graph.edges()) {
        if (position[u] < position[v])
            arcs.emplace_back(u, v);
        else
            arcs.emplace_back(v, u);
    }
    return Orientation(std::move(arcs));
}

EliminationOrder orientation_to_order(const Instance& inst, const Orientation& o) {
    ValidationReport report = validate_orientation(inst, o);
    if (!report.acyclic) throw NotAcyclic();
    if (!report.t_odd) throw NotTOdd();
    return {topological_order(inst.graph.vertex_count(), o)};
}

}  // namespace aop
