#include "aop/verify.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_set>

namespace aop {

namespace {

SweepResult sweep_targets(const FamilySpec& spec, const std::vector<uint32_t>& targets,
                          const SweepOptions& opts) {
    Family fam = build_family(spec);
    const int n = fam.graph.vertex_count();

    struct PerTarget {
        uint8_t solver_status = 0;
        bool oracle_ok = false;
        bool conditions_ok = false;
    };
    std::vector<PerTarget> rows(targets.size());

    auto worker = [&](size_t begin, size_t end) {
        SubsetSolver oracle(fam.graph, opts.oracle);
        for (size_t idx = begin; idx < end; ++idx) {
            uint32_t t_mask = targets[idx];
            Instance inst(fam.graph, mask_to_set(n, t_mask));
            SolveOutcome out = solve_family(inst, spec);
            rows[idx].solver_status = static_cast<uint8_t>(out.status);
            rows[idx].oracle_ok = oracle.solvable(t_mask);
            rows[idx].conditions_ok = satisfies_conditions(inst, ConditionSet::all());
        }
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1 || targets.size() < 2) {
        worker(0, targets.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (targets.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            size_t begin = t * chunk, end = std::min(targets.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    SweepResult result;
    result.targets = targets.size();
    for (size_t idx = 0; idx < targets.size(); ++idx) {
        const PerTarget& row = rows[idx];
        auto status = static_cast<SolveStatus>(row.solver_status);
        switch (status) {
            case SolveStatus::Solved: ++result.solver_solved; break;
            case SolveStatus::NoSolution: ++result.solver_no_solution; break;
            case SolveStatus::ConditionViolated: ++result.solver_condition_violated; break;
            case SolveStatus::Unsupported: ++result.solver_unsupported; break;
        }
        if (row.oracle_ok) ++result.oracle_solvable;
        if (row.conditions_ok) {
            ++result.conditions_satisfied;
            if (!row.oracle_ok) ++result.conditions_satisfied_unsolvable;
        }
        if (status == SolveStatus::Unsupported) continue;
        if ((status == SolveStatus::Solved) != row.oracle_ok) {
            ++result.mismatches;
            result.mismatch_targets.push_back(targets[idx]);
        }
    }
    return result;
}

}  // namespace

SweepResult sweep_family_full(const FamilySpec& spec, const SweepOptions& opts) {
    Family fam = build_family(spec);
    int n = fam.graph.vertex_count();
    if (n > 25) throw TooLarge("full sweep beyond 2^25 targets");
    std::vector<uint32_t> targets;
    targets.reserve(uint64_t{1} << n);
    uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    for (uint64_t t = 0; t <= full; ++t) targets.push_back(static_cast<uint32_t>(t));
    return sweep_targets(spec, targets, opts);
}

SweepResult sweep_family_sampled(const FamilySpec& spec, uint64_t count, uint64_t seed,
                                 const SweepOptions& opts) {
    Family fam = build_family(spec);
    int n = fam.graph.vertex_count();
    if (n > 32) throw TooLarge("sampled sweep beyond 32 vertices");
    uint64_t space = n == 32 ? 0 : uint64_t{1} << n;  // 0 means 2^32
    std::mt19937_64 rng(seed);
    std::unordered_set<uint32_t> chosen;
    std::vector<uint32_t> targets;
    if (space != 0 && count >= space) {
        for (uint64_t t = 0; t < space; ++t) targets.push_back(static_cast<uint32_t>(t));
    } else {
        while (targets.size() < count) {
            uint32_t t = static_cast<uint32_t>(rng() & (space == 0 ? ~uint64_t{0} : space - 1));
            if (chosen.insert(t).second) targets.push_back(t);
        }
        std::sort(targets.begin(), targets.end());
    }
    return sweep_targets(spec, targets, opts);
}

}  // namespace aop
