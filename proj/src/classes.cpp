#include "aop/classes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace aop {

StructuralProfile structural_profile(const Graph& g) {
    StructuralProfile s;
    s.connected = g.connected();
    s.all_degrees_even = g.all_degrees_even();
    s.eulerian = s.connected && s.all_degrees_even;
    s.vertex_edge_parity = (g.vertex_count() + g.edge_count()) % 2;
    s.connected_noneulerian_odd = s.connected && !s.eulerian && s.vertex_edge_parity == 1;
    s.connected_noneulerian_even = s.connected && !s.eulerian && s.vertex_edge_parity == 0;
    return s;
}

ClassReport classify_graph(const Graph& g, const OracleOptions& opts) {
    ClassReport report;
    SubsetSolver solver(g, opts);
    if (g.vertex_count() > opts.enumeration_cap)
        throw TooLarge("graph exceeds the enumeration cap");
    for (int bits = 1; bits <= 7; ++bits) {
        ConditionSet n = ConditionSet::from_bits(bits);
        report.member[bits] = true;
        enumerate_condition_sets(g, n, [&](uint32_t t_mask) {
            if (!report.member[bits]) return;
            ++report.checked[bits];
            if (!solver.solvable(t_mask)) {
                report.member[bits] = false;
                report.counterexample[bits] = Instance(g, mask_to_set(g.vertex_count(), t_mask));
            }
        });
    }
    return report;
}

bool cp_membership_single_test(const Graph& g, const OracleOptions& opts) {
    SubsetSolver solver(g, opts);
    uint32_t full = solver.full_mask();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (solver.solvable(full & ~(uint32_t{1} << v))) return true;
    return false;
}

const char* class_placement_name(ClassPlacement p) {
    switch (p) {
        case ClassPlacement::CP: return "C_P";
        case ClassPlacement::CPSNotCP: return "C_PS \\ C_P";
        case ClassPlacement::CPSSbarNotCPS: return "C_PSSbar \\ C_PS";
        case ClassPlacement::Outside: return "outside C_PSSbar";
        case ClassPlacement::NoClaim: return "no claim";
    }
    return "?";
}

ClassPlacement family_class(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Path:
        case FamilyKind::Tree:
            return ClassPlacement::CP;
        case FamilyKind::Cycle:
            return ClassPlacement::CPSNotCP;
        case FamilyKind::Grid:
            if (spec.p == 1 || spec.q == 1) return ClassPlacement::CP;  // a path
            if (spec.p % 2 == 1 || spec.q % 2 == 1) return ClassPlacement::CP;
            return ClassPlacement::NoClaim;  // even-by-even grids have bad instances
        case FamilyKind::Cylinder:
            if (spec.q == 1) return ClassPlacement::CPSNotCP;  // a cycle
            if (spec.p % 2 == 1 && spec.q % 2 == 0) return ClassPlacement::CP;
            return ClassPlacement::CPSSbarNotCPS;
        case FamilyKind::Torus:
            if (spec.p < 4 || spec.q < 4) return ClassPlacement::NoClaim;
            return ClassPlacement::CPSNotCP;
        case FamilyKind::QuasiTwoCylinder:
            return ClassPlacement::NoClaim;
        case FamilyKind::Clique:
            // K_1, K_2 solve like trees; K_3 is a cycle; K_4 still passes all
            // PSSbar targets; everything larger has a failing target of size
            // floor(n/2) - 2.
            if (spec.p <= 2) return ClassPlacement::CP;
            if (spec.p == 3) return ClassPlacement::CPSNotCP;
            if (spec.p == 4) return ClassPlacement::CPSSbarNotCPS;
            return ClassPlacement::Outside;
        case FamilyKind::Product:
            return ClassPlacement::NoClaim;
    }
    return ClassPlacement::NoClaim;
}

uint64_t canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8) throw TooLarge("canonical form by permutation is limited to 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto pair_bit = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return uint64_t{1} << (a * n + b);
    };
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t code = 0;
        for (auto [u, v] : g.edges()) code |= pair_bit(perm[u], perm[v]);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n > 6) throw TooLarge("graph enumeration is limited to 6 vertices");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::map<uint64_t, Graph> seen;
    for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1) edges.push_back(slots[k]);
        Graph g(n, std::move(edges));
        seen.emplace(canonical_form(g), std::move(g));
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [code, g] : seen) out.push_back(std::move(g));
    return out;
}

}  // namespace aop
