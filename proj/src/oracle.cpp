#include "aop/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <unordered_map>

namespace aop {

namespace {

constexpr uint8_t kUnvisited = 0xFF;
constexpr uint8_t kRoot = 0xFE;
constexpr int kFlatCap = 26;  // beyond this, fall back to hashed visited states

// Predecessor store: flat array when 2^n fits comfortably, hash map otherwise,
// so memory stays proportional to the visited state count on large inputs.
class PredStore {
public:
    PredStore(int n) : flat_(n <= kFlatCap) {
        if (flat_) flat_store_.assign(uint64_t{1} << n, kUnvisited);
    }
    uint8_t get(uint32_t state) const {
        if (flat_) return flat_store_[state];
        auto it = hashed_.find(state);
        return it == hashed_.end() ? kUnvisited : it->second;
    }
    bool visit(uint32_t state, uint8_t pred) {
        if (flat_) {
            if (flat_store_[state] != kUnvisited) return false;
            flat_store_[state] = pred;
            return true;
        }
        return hashed_.emplace(state, pred).second;
    }

private:
    bool flat_;
    std::vector<uint8_t> flat_store_;
    std::unordered_map<uint32_t, uint8_t> hashed_;
};

}  // namespace

SubsetSolver::SubsetSolver(const Graph& g, OracleOptions opts) : n_(g.vertex_count()) {
    if (n_ > opts.vertex_cap || n_ > 32)
        throw TooLarge("graph exceeds the oracle vertex cap (" + std::to_string(opts.vertex_cap) + ")");
    adjacency_masks_.assign(n_, 0);
    for (auto [u, v] : g.edges()) {
        adjacency_masks_[u] |= uint32_t{1} << v;
        adjacency_masks_[v] |= uint32_t{1} << u;
    }
}

std::optional<std::vector<int>> SubsetSolver::find_order(uint32_t t_mask) const {
    const uint32_t full = full_mask();
    if (n_ == 0) return std::vector<int>{};

    PredStore pred(n_);
    pred.visit(0, kRoot);
    std::vector<uint32_t> stack{0};
    uint32_t reached_full = full;
    bool found = false;

    while (!stack.empty() && !found) {
        uint32_t state = stack.back();
        stack.pop_back();
        uint32_t candidates = full & ~state;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            bool in_t = (t_mask >> v) & 1;
            bool odd_removed_neighbors = std::popcount(state & adjacency_masks_[v]) % 2 != 0;
            if (in_t != odd_removed_neighbors) continue;  // vertex is black, not removable
            uint32_t next = state | (uint32_t{1} << v);
            if (!pred.visit(next, static_cast<uint8_t>(v))) continue;
            if (next == full) {
                found = true;
                break;
            }
            stack.push_back(next);
        }
    }
    if (!found && pred.get(full) == kUnvisited) return std::nullopt;

    std::vector<int> order(n_);
    uint32_t state = reached_full;
    for (int i = n_ - 1; i >= 0; --i) {
        uint8_t v = pred.get(state);
        assert(v != kUnvisited && v != kRoot);
        order[i] = v;
        state &= ~(uint32_t{1} << v);
    }
    assert(state == 0);
    return order;
}

std::optional<EliminationOrder> decide_exists(const Instance& inst, const OracleOptions& opts) {
    SubsetSolver solver(inst.graph, opts);
    auto order = solver.find_order(target_mask(inst));
    if (!order) return std::nullopt;
    EliminationOrder witness{std::move(*order)};
    // Every reachable full state must decode to a valid play.
    PlayCheck check = validate_elimination_order(inst, witness);
    assert(check.valid);
    if (!check.valid) throw Error("oracle produced an invalid witness");
    return witness;
}

uint32_t target_mask(const Instance& inst) {
    uint32_t mask = 0;
    for (int v : inst.target.to_vector()) mask |= uint32_t{1} << v;
    return mask;
}

VertexSet mask_to_set(int n, uint32_t mask) {
    VertexSet s(n);
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        s.set(v);
    }
    return s;
}

void enumerate_condition_sets(const Graph& g, const ConditionSet& conditions,
                              const std::function<void(uint32_t)>& yield) {
    int n = g.vertex_count();
    if (n > 25) throw TooLarge("target enumeration beyond 2^25 subsets");
    const uint32_t full = (n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    uint32_t odd_degree = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 != 0) odd_degree |= uint32_t{1} << v;
    const int edge_parity = g.edge_count() % 2;

    for (uint64_t t = 0; t <= full; ++t) {
        uint32_t mask = static_cast<uint32_t>(t);
        if (conditions.p && (std::popcount(mask) + edge_parity) % 2 != 0) continue;
        if (conditions.s || conditions.sbar) {
            uint32_t source = full & ~mask;
            uint32_t sink = (mask & odd_degree) | (full & ~mask & ~odd_degree);
            auto holds = [&](uint32_t a, uint32_t b) {
                if (a == 0) return false;
                if (std::popcount(a) > 1) return true;
                return n == 1 || a != b;
            };
            if (conditions.s && !holds(source, sink)) continue;
            if (conditions.sbar && !holds(sink, source)) continue;
        }
        yield(mask);
        if (mask == full) break;
    }
}

std::vector<uint32_t> condition_sets(const Graph& g, const ConditionSet& conditions) {
    std::vector<uint32_t> out;
    enumerate_condition_sets(g, conditions, [&](uint32_t m) { out.push_back(m); });
    return out;
}

MembershipReport class_membership_small(const Graph& g, const ConditionSet& conditions,
                                        const OracleOptions& opts) {
    int n = g.vertex_count();
    if (n > opts.enumeration_cap)
        throw TooLarge("graph exceeds the enumeration cap (" + std::to_string(opts.enumeration_cap) + ")");
    SubsetSolver solver(g, opts);
    MembershipReport report;
    report.member = true;
    enumerate_condition_sets(g, conditions, [&](uint32_t t_mask) {
        if (!report.member) return;
        ++report.checked_count;
        if (!solver.solvable(t_mask)) {
            report.member = false;
            report.counterexample = Instance(g, mask_to_set(n, t_mask));
        }
    });
    return report;
}

}  // namespace aop
