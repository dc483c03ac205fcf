#pragma once

#include <vector>

#include "aop/core.hpp"

namespace aop {

// A permutation of the vertex ids; position = removal time.
struct EliminationOrder {
    std::vector<int> order;

    bool operator==(const EliminationOrder& o) const { return order == o.order; }
};

// State of the single-player elimination game. A vertex is black exactly when
// its target membership xored with the parity of its removed neighbors is true;
// only white vertices may be removed.
class GameState {
public:
    explicit GameState(const Instance& inst);

    bool removed(int v) const { return removed_.test(v); }
    bool black(int v) const { return inst_->target.test(v) != (flips_[v] % 2 != 0); }
    bool can_remove(int v) const { return !removed(v) && !black(v); }
    void remove(int v);  // throws InvalidPlay
    int remaining() const { return remaining_; }

private:
    const Instance* inst_;
    VertexSet removed_;
    std::vector<int> flips_;  // removed-neighbor counts
    int remaining_;
};

struct PlayCheck {
    bool valid = false;
    int first_violation = -1;  // index into the order when invalid
};

PlayCheck validate_elimination_order(const Instance& inst, const EliminationOrder& ord);

// Directs every edge from the earlier-removed endpoint to the later-removed.
// Throws InvalidPlay when the order is not a valid play.
Orientation order_to_orientation(const Instance& inst, const EliminationOrder& ord);

// Topological sort of an acyclic T-odd orientation, as a play of the game.
// Throws NotAcyclic / NotTOdd.
EliminationOrder orientation_to_order(const Instance& inst, const Orientation& o);

}  // namespace aop
