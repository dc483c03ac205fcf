#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "aop/game.hpp"

namespace aop {

struct OracleOptions {
    int vertex_cap = 24;        // decide_exists refuses larger graphs (hard cap 32)
    int enumeration_cap = 20;   // class_membership_small refuses larger graphs
};

// Exact search over the plays of the elimination game, collapsed to removed-set
// states: whether a vertex is removable depends only on the set of already
// removed vertices, so the n! plays reduce to at most 2^n states.
class SubsetSolver {
public:
    explicit SubsetSolver(const Graph& g, OracleOptions opts = {});

    // Returns a valid elimination order iff one exists for target set t_mask.
    std::optional<std::vector<int>> find_order(uint32_t t_mask) const;
    bool solvable(uint32_t t_mask) const { return find_order(t_mask).has_value(); }

    int vertex_count() const { return n_; }
    uint32_t full_mask() const { return n_ == 32 ? ~uint32_t{0} : (uint32_t{1} << n_) - 1; }

private:
    int n_;
    std::vector<uint32_t> adjacency_masks_;
};

// Decision procedure for arbitrary small graphs; the returned witness always
// passes validate_elimination_order. Throws TooLarge above the cap.
std::optional<EliminationOrder> decide_exists(const Instance& inst, const OracleOptions& opts = {});

// Yields exactly the T subsets of V passing all flagged conditions, in
// ascending bitmask order.
void enumerate_condition_sets(const Graph& g, const ConditionSet& conditions,
                              const std::function<void(uint32_t)>& yield);
std::vector<uint32_t> condition_sets(const Graph& g, const ConditionSet& conditions);

uint32_t target_mask(const Instance& inst);
VertexSet mask_to_set(int n, uint32_t mask);

struct MembershipReport {
    bool member = false;
    std::optional<Instance> counterexample;  // a T satisfying the conditions with no solution
    uint64_t checked_count = 0;
};

// Oracle-backed membership in the class C_N: every enumerated T must admit an
// acyclic T-odd orientation. Throws TooLarge above the enumeration cap.
MembershipReport class_membership_small(const Graph& g, const ConditionSet& conditions,
                                        const OracleOptions& opts = {});

}  // namespace aop
