#pragma once

#include <array>
#include <optional>
#include <string>

#include "aop/families.hpp"
#include "aop/oracle.hpp"

namespace aop {

struct StructuralProfile {
    bool connected = false;
    bool eulerian = false;           // connected with all degrees even
    bool all_degrees_even = false;   // not necessarily connected
    int vertex_edge_parity = 0;      // (|V| + |E|) mod 2
    // Structural halves of the class characterizations; membership in
    // C_PSSbar itself is decided separately by the oracle.
    bool connected_noneulerian_odd = false;  // connected, non-Eulerian, |V|+|E| odd
    bool connected_noneulerian_even = false;  // connected, non-Eulerian, |V|+|E| even
};

StructuralProfile structural_profile(const Graph& g);

// Membership of a graph in the classes C_N for all nonempty N; indexed by
// ConditionSet::bits() (1..7).
struct ClassReport {
    std::array<bool, 8> member{};
    std::array<std::optional<Instance>, 8> counterexample;
    std::array<uint64_t, 8> checked{};
    std::string method = "oracle";

    bool in(const ConditionSet& n) const { return member[n.bits()]; }
};

// Decides all seven classes by oracle enumeration. Throws TooLarge beyond the
// oracle caps.
ClassReport classify_graph(const Graph& g, const OracleOptions& opts = {});

// C_P membership via the single-test shortcut: an acyclic (V minus one
// vertex)-odd orientation exists for some vertex.
bool cp_membership_single_test(const Graph& g, const OracleOptions& opts = {});

enum class ClassPlacement { CP, CPSNotCP, CPSSbarNotCPS, Outside, NoClaim };

const char* class_placement_name(ClassPlacement p);

// Parameter-parity placement of a family in the class hierarchy, without
// enumeration. Returns NoClaim where the characterization says nothing.
ClassPlacement family_class(const FamilySpec& spec);

// Canonical form by exhaustive permutation (n <= 8): the lexicographically
// smallest upper-triangular adjacency bitmask over all relabelings.
uint64_t canonical_form(const Graph& g);

// All non-isomorphic simple graphs with exactly n vertices (n <= 6 intended).
std::vector<Graph> nonisomorphic_graphs(int n);

}  // namespace aop
