#pragma once

#include <vector>

#include "aop/game.hpp"

namespace aop {

// Ordered partition <V_0,...,V_k> of the vertex set with the derived flip sets
// Z_i (vertices of V_i with an odd number of neighbors in earlier parts) and
// local targets T_i = Z_i symmetric-difference T(V_i).
struct TDecomposition {
    std::vector<std::vector<int>> parts;  // sorted vertex ids
    std::vector<VertexSet> flip_sets;     // Z_i, over global ids
    std::vector<VertexSet> local_targets; // T_i, over global ids
};

// Computes Z_i and T_i; throws NotAPartition when the parts do not partition V.
TDecomposition decomposition_targets(const Instance& inst, std::vector<std::vector<int>> parts);

// Per-part condition P: |T_i| = |E(G[V_i])| mod 2.
std::vector<bool> decomposition_satisfies_p_per_part(const Instance& inst, const TDecomposition& d);
bool decomposition_satisfies_p(const Instance& inst, const TDecomposition& d);

// Parity inference: when the instance satisfies P and every part except
// `skip` satisfies its per-part P check, the skipped part does too. Returns
// true after asserting the conclusion; throws PreconditionViolated when the
// premises fail.
bool infer_missing_part_parity(const Instance& inst, const TDecomposition& d, int skip);

struct PartInstance {
    Instance instance;           // induced subgraph with target T_i, local ids
    std::vector<int> to_global;  // local id -> global id
};

PartInstance part_instance(const Instance& inst, const TDecomposition& d, int i);

// Merges per-part acyclic T_i-odd orientations (local ids) into an acyclic
// T-odd orientation of the whole instance: intra-part arcs are kept, cross
// edges are directed from the lower-indexed part to the higher. Throws
// BadSubOrientation(i) when subs[i] fails validation.
Orientation compose_orientations(const Instance& inst, const TDecomposition& d,
                                 const std::vector<Orientation>& subs);

// Singleton parts in topological order of an acyclic T-odd orientation; every
// local target comes out empty. Throws NotAcyclic / NotTOdd.
TDecomposition trivial_decomposition(const Instance& inst, const Orientation& o);

}  // namespace aop
