#include "aop/core.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace aop {

int VertexSet::count() const {
    int c = 0;
    for (uint64_t w : bits_) c += std::popcount(w);
    return c;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet r(n_);
    for (int v = 0; v < n_; ++v)
        if (!test(v)) r.set(v);
    return r;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> r;
    for (int v = 0; v < n_; ++v)
        if (test(v)) r.push_back(v);
    return r;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw InvalidParameters("vertex count must be non-negative");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidParameters("edge endpoint out of range");
        if (u == v) throw InvalidParameters("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw InvalidParameters("duplicate edge");
    edges_ = std::move(edge_list);
    adjacency_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

bool Graph::all_degrees_even() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) % 2 != 0) return false;
    return true;
}

Instance::Instance(Graph g, VertexSet t) : graph(std::move(g)), target(std::move(t)) {
    if (target.universe() != graph.vertex_count())
        throw InvalidParameters("target universe does not match vertex count");
}

Instance::Instance(Graph g, const std::vector<int>& t_members) {
    for (int v : t_members)
        if (v < 0 || v >= g.vertex_count()) throw InvalidParameters("target vertex out of range");
    target = VertexSet(g.vertex_count(), t_members);
    graph = std::move(g);
}

Orientation::Orientation(std::vector<std::pair<int, int>> arc_list) : arcs(std::move(arc_list)) {
    std::sort(arcs.begin(), arcs.end());
}

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::P: return "P";
        case Condition::S: return "S";
        case Condition::Sbar: return "Sbar";
    }
    return "?";
}

bool parity_condition_p(const Instance& inst) {
    return (inst.graph.edge_count() + inst.target.count()) % 2 == 0;
}

std::pair<VertexSet, VertexSet> source_and_sink_sets(const Instance& inst) {
    int n = inst.graph.vertex_count();
    VertexSet source(n), sink(n);
    for (int v = 0; v < n; ++v) {
        bool in_t = inst.target.test(v);
        bool odd_deg = inst.graph.degree(v) % 2 != 0;
        if (!in_t) source.set(v);
        if (in_t == odd_deg) sink.set(v);
    }
    return {source, sink};
}

std::pair<bool, bool> conditions_s_sbar(const Instance& inst) {
    auto [source, sink] = source_and_sink_sets(inst);
    int n = inst.graph.vertex_count();
    auto holds = [&](const VertexSet& a, const VertexSet& b) {
        if (a.empty()) return false;
        if (a.count() > 1) return true;
        return n == 1 || a != b;
    };
    return {holds(source, sink), holds(sink, source)};
}

bool satisfies_conditions(const Instance& inst, const ConditionSet& which) {
    if (which.p && !parity_condition_p(inst)) return false;
    if (which.s || which.sbar) {
        auto [s, sbar] = conditions_s_sbar(inst);
        if (which.s && !s) return false;
        if (which.sbar && !sbar) return false;
    }
    return true;
}

ValidationReport validate_orientation(const Instance& inst, const Orientation& o) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    if (static_cast<int>(o.arcs.size()) != g.edge_count()) throw MismatchedEdgeSet();
    std::vector<std::pair<int, int>> covered;
    covered.reserve(o.arcs.size());
    for (auto [a, b] : o.arcs) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) throw MismatchedEdgeSet();
        covered.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(covered.begin(), covered.end());
    if (covered != g.edges()) throw MismatchedEdgeSet();

    ValidationReport report;
    std::vector<int> indeg = in_degrees(n, o);

    report.t_odd = true;
    for (int v = 0; v < n; ++v) {
        if ((indeg[v] % 2 != 0) != inst.target.test(v)) {
            report.t_odd = false;
            report.parity_witness = v;
            break;
        }
    }

    // Kahn peel; leftover vertices contain a directed cycle.
    std::vector<std::vector<int>> out(n);
    std::vector<int> remaining = indeg;
    for (auto [a, b] : o.arcs) out[a].push_back(b);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (remaining[v] == 0) queue.push_back(v);
    int peeled = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++peeled;
        for (int w : out[v])
            if (--remaining[w] == 0) queue.push_back(w);
    }
    report.acyclic = peeled == n;
    if (!report.acyclic) {
        // Walk backwards through arcs staying in the unpeeled region until a repeat.
        std::vector<std::vector<int>> in(n);
        for (auto [a, b] : o.arcs)
            if (remaining[a] > 0 && remaining[b] > 0) in[b].push_back(a);
        int start = 0;
        while (remaining[start] == 0) ++start;
        std::vector<int> seen(n, -1);
        std::vector<int> walk;
        int v = start;
        while (seen[v] < 0) {
            seen[v] = static_cast<int>(walk.size());
            walk.push_back(v);
            v = in[v].front();
        }
        report.cycle_witness.assign(walk.begin() + seen[v], walk.end());
        std::reverse(report.cycle_witness.begin(), report.cycle_witness.end());
    }
    return report;
}

std::vector<int> topological_order(int n, const Orientation& o) {
    std::vector<int> indeg = in_degrees(n, o);
    std::vector<std::vector<int>> out(n);
    for (auto [a, b] : o.arcs) out[a].push_back(b);
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) throw CyclicOrientation();
    return order;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int p = g.vertex_count(), q = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(p) * h.edge_count() + static_cast<size_t>(q) * g.edge_count());
    for (int i = 0; i < p; ++i)
        for (auto [a, b] : h.edges()) edges.emplace_back(i * q + a, i * q + b);
    for (auto [a, b] : g.edges())
        for (int j = 0; j < q; ++j) edges.emplace_back(a * q + j, b * q + j);
    return Graph(p * q, std::move(edges));
}

int InducedSubgraph::local_of(int global) const {
    auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
    if (it == to_global.end() || *it != global) return -1;
    return static_cast<int>(it - to_global.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    InducedSubgraph sub;
    sub.to_global = vertices;
    std::sort(sub.to_global.begin(), sub.to_global.end());
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < sub.to_global.size(); ++a) {
        for (int w : g.neighbors(sub.to_global[a])) {
            int b = sub.local_of(w);
            if (b > static_cast<int>(a)) edges.emplace_back(static_cast<int>(a), b);
        }
    }
    sub.graph = Graph(static_cast<int>(sub.to_global.size()), std::move(edges));
    return sub;
}

std::vector<int> in_degrees(int n, const Orientation& o) {
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : o.arcs) ++indeg[b];
    return indeg;
}

}  // namespace aop
