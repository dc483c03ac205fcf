#include "aop/decomp.hpp"

#include <algorithm>
#include <cassert>

namespace aop {

TDecomposition decomposition_targets(const Instance& inst, std::vector<std::vector<int>> parts) {
    int n = inst.graph.vertex_count();
    std::vector<int> part_of(n, -1);
    int covered = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::sort(parts[i].begin(), parts[i].end());
        for (int v : parts[i]) {
            if (v < 0 || v >= n || part_of[v] != -1) throw NotAPartition();
            part_of[v] = static_cast<int>(i);
            ++covered;
        }
    }
    if (covered != n) throw NotAPartition();

    TDecomposition d;
    d.parts = std::move(parts);
    d.flip_sets.reserve(d.parts.size());
    d.local_targets.reserve(d.parts.size());
    for (size_t i = 0; i < d.parts.size(); ++i) {
        VertexSet z(n), t(n);
        for (int v : d.parts[i]) {
            int earlier = 0;
            for (int w : inst.graph.neighbors(v))
                if (part_of[w] < static_cast<int>(i)) ++earlier;
            if (earlier % 2 != 0) z.set(v);
            if (z.test(v) != inst.target.test(v)) t.set(v);
        }
        d.flip_sets.push_back(std::move(z));
        d.local_targets.push_back(std::move(t));
    }
    return d;
}

namespace {

int induced_edge_count(const Graph& g, const std::vector<int>& part) {
    int count = 0;
    for (int v : part)
        for (int w : g.neighbors(v))
            if (w > v && std::binary_search(part.begin(), part.end(), w)) ++count;
    return count;
}

}  // namespace

std::vector<bool> decomposition_satisfies_p_per_part(const Instance& inst, const TDecomposition& d) {
    std::vector<bool> result;
    result.reserve(d.parts.size());
    for (size_t i = 0; i < d.parts.size(); ++i) {
        int t = d.local_targets[i].count();
        int e = induced_edge_count(inst.graph, d.parts[i]);
        result.push_back((t + e) % 2 == 0);
    }
    return result;
}

bool decomposition_satisfies_p(const Instance& inst, const TDecomposition& d) {
    auto per_part = decomposition_satisfies_p_per_part(inst, d);
    return std::all_of(per_part.begin(), per_part.end(), [](bool b) { return b; });
}

bool infer_missing_part_parity(const Instance& inst, const TDecomposition& d, int skip) {
    if (skip < 0 || skip >= static_cast<int>(d.parts.size()))
        throw PreconditionViolated("skip index out of range");
    if (!parity_condition_p(inst)) throw PreconditionViolated("instance does not satisfy P");
    auto per_part = decomposition_satisfies_p_per_part(inst, d);
    for (size_t i = 0; i < per_part.size(); ++i)
        if (static_cast<int>(i) != skip && !per_part[i])
            throw PreconditionViolated("part " + std::to_string(i) + " fails its P check");
    if (!per_part[skip]) throw Error("parity inference failed: skipped part does not satisfy P");
    return true;
}

PartInstance part_instance(const Instance& inst, const TDecomposition& d, int i) {
    InducedSubgraph sub = induced_subgraph(inst.graph, d.parts[i]);
    VertexSet local_target(sub.graph.vertex_count());
    for (int local = 0; local < sub.graph.vertex_count(); ++local)
        if (d.local_targets[i].test(sub.to_global[local])) local_target.set(local);
    PartInstance part;
    part.to_global = sub.to_global;
    part.instance = Instance(std::move(sub.graph), std::move(local_target));
    return part;
}

Orientation compose_orientations(const Instance& inst, const TDecomposition& d,
                                 const std::vector<Orientation>& subs) {
    if (subs.size() != d.parts.size()) throw InvalidParameters("one sub-orientation per part required");
    int n = inst.graph.vertex_count();
    std::vector<int> part_of(n, -1);
    for (size_t i = 0; i < d.parts.size(); ++i)
        for (int v : d.parts[i]) part_of[v] = static_cast<int>(i);

    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(inst.graph.edge_count());
    for (size_t i = 0; i < d.parts.size(); ++i) {
        PartInstance part = part_instance(inst, d, static_cast<int>(i));
        ValidationReport report;
        try {
            report = validate_orientation(part.instance, subs[i]);
        } catch (const MismatchedEdgeSet&) {
            throw BadSubOrientation(static_cast<int>(i));
        }
        if (!report.ok()) throw BadSubOrientation(static_cast<int>(i));
        for (auto [a, b] : subs[i].arcs) arcs.emplace_back(part.to_global[a], part.to_global[b]);
    }
    for (auto [u, v] : inst.graph.edges()) {
        if (part_of[u] == part_of[v]) continue;
        if (part_of[u] < part_of[v])
            arcs.emplace_back(u, v);
        else
            arcs.emplace_back(v, u);
    }
    Orientation composed(std::move(arcs));
    ValidationReport whole = validate_orientation(inst, composed);
    if (!whole.ok()) throw Error("composed orientation failed validation");
    return composed;
}

TDecomposition trivial_decomposition(const Instance& inst, const Orientation& o) {
    ValidationReport report = validate_orientation(inst, o);
    if (!report.acyclic) throw NotAcyclic();
    if (!report.t_odd) throw NotTOdd();
    std::vector<int> order = topological_order(inst.graph.vertex_count(), o);
    std::vector<std::vector<int>> parts;
    parts.reserve(order.size());
    for (int v : order) parts.push_back({v});
    TDecomposition d = decomposition_targets(inst, std::move(parts));
    for (const VertexSet& t : d.local_targets)
        if (!t.empty()) throw Error("trivial decomposition produced a nonempty local target");
    return d;
}

}  // namespace aop
