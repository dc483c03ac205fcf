#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MismatchedEdgeSet : Error { MismatchedEdgeSet() : Error("orientation does not cover the instance edge set") {} };
struct CyclicOrientation : Error { CyclicOrientation() : Error("orientation contains a directed cycle") {} };
struct InvalidParameters : Error { using Error::Error; };
struct NotAPartition : Error { NotAPartition() : Error("parts do not partition the vertex set") {} };
struct PreconditionViolated : Error { using Error::Error; };
struct InvalidPlay : Error { InvalidPlay() : Error("elimination order is not a valid play") {} };
struct NotAcyclic : Error { NotAcyclic() : Error("orientation is not acyclic") {} };
struct NotTOdd : Error { NotTOdd() : Error("orientation is not T-odd") {} };
struct TooLarge : Error { using Error::Error; };
struct NotATree : Error { NotATree() : Error("graph is not a tree") {} };
struct NotACycle : Error { NotACycle() : Error("graph is not a cycle") {} };
struct NotAPath : Error { NotAPath() : Error("graph is not a path") {} };
struct NotAGrid : Error { NotAGrid() : Error("graph is not a canonical grid") {} };
struct IsBadPathInstance : Error { IsBadPathInstance() : Error("instance is a bad path instance") {} };
struct TransformNotApplicable : Error { using Error::Error; };
struct BadSubOrientation : Error {
    explicit BadSubOrientation(int part_index)
        : Error("sub-orientation invalid for part " + std::to_string(part_index)), part(part_index) {}
    int part;
};

// Set of vertex ids 0..n-1, backed by a bit vector.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}
    VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
        for (int v : members) set(v);
    }

    int universe() const { return n_; }
    bool test(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { bits_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { bits_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    void flip(int v) { bits_[v >> 6] ^= uint64_t{1} << (v & 63); }

    int count() const;
    bool empty() const { return count() == 0; }
    bool parity_odd() const { return count() % 2 != 0; }

    VertexSet& operator^=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    VertexSet complement() const;
    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    bool subset_of(const VertexSet& o) const;

    std::vector<int> to_vector() const;

private:
    int n_ = 0;
    std::vector<uint64_t> bits_;
};

// Simple undirected graph over vertex ids 0..n-1; immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(int u, int v) const;

    bool connected() const;
    bool all_degrees_even() const;
    bool eulerian() const { return connected() && all_degrees_even(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;      // canonical: u < v, sorted
    std::vector<std::vector<int>> adjacency_;     // sorted neighbor lists
};

// A graph together with the target set T of vertices required to have odd in-degree.
struct Instance {
    Instance() = default;
    Instance(Graph g, VertexSet t);
    Instance(Graph g, const std::vector<int>& t_members);
    Instance(Graph g, std::initializer_list<int> t_members)
        : Instance(std::move(g), std::vector<int>(t_members)) {}

    Graph graph;
    VertexSet target;
};

// One arc per edge of the underlying graph.
struct Orientation {
    Orientation() = default;
    explicit Orientation(std::vector<std::pair<int, int>> arc_list);

    std::vector<std::pair<int, int>> arcs;  // sorted

    bool operator==(const Orientation& o) const { return arcs == o.arcs; }
};

enum class Condition { P, S, Sbar };

const char* condition_name(Condition c);

// Subset of the necessary conditions {P, S, Sbar}.
struct ConditionSet {
    bool p = false;
    bool s = false;
    bool sbar = false;

    static ConditionSet all() { return {true, true, true}; }
    static ConditionSet only_p() { return {true, false, false}; }
    int bits() const { return (p ? 1 : 0) | (s ? 2 : 0) | (sbar ? 4 : 0); }
    static ConditionSet from_bits(int b) { return {(b & 1) != 0, (b & 2) != 0, (b & 4) != 0}; }
};

// Condition P: |E| + |T| even.
bool parity_condition_p(const Instance& inst);

// Source(T) = V \ T; Sink(T) = odd-degree members of T plus even-degree non-members.
std::pair<VertexSet, VertexSet> source_and_sink_sets(const Instance& inst);

// Conditions S and Sbar as defined from Source(T)/Sink(T).
std::pair<bool, bool> conditions_s_sbar(const Instance& inst);

bool satisfies_conditions(const Instance& inst, const ConditionSet& which);

struct ValidationReport {
    bool acyclic = false;
    bool t_odd = false;
    std::vector<int> cycle_witness;   // a directed cycle when !acyclic
    int parity_witness = -1;          // a vertex whose in-degree parity disagrees with T
    bool ok() const { return acyclic && t_odd; }
};

// Checks acyclicity and T-oddness; throws MismatchedEdgeSet when o is not an
// orientation of inst.graph.
ValidationReport validate_orientation(const Instance& inst, const Orientation& o);

// Deterministic topological order (lowest id first among available);
// throws CyclicOrientation.
std::vector<int> topological_order(int n, const Orientation& o);

// Cartesian product with row-major ids: (u_i, v_j) -> i*|V(h)| + j.
Graph cartesian_product(const Graph& g, const Graph& h);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_global;  // local id -> global id (sorted ascending)
    int local_of(int global) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

std::vector<int> in_degrees(int n, const Orientation& o);

}  // namespace aop
