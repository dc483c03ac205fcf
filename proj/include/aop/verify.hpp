#pragma once

#include <cstdint>

#include "aop/solvers.hpp"

namespace aop {

struct SweepOptions {
    int threads = 1;
    OracleOptions oracle;
};

struct SweepResult {
    uint64_t targets = 0;
    uint64_t solver_solved = 0;
    uint64_t solver_no_solution = 0;
    uint64_t solver_condition_violated = 0;
    uint64_t solver_unsupported = 0;
    uint64_t oracle_solvable = 0;
    uint64_t conditions_satisfied = 0;             // T passing P,S,Sbar
    uint64_t conditions_satisfied_unsolvable = 0;  // ...that the oracle rejects
    uint64_t mismatches = 0;
    std::vector<uint32_t> mismatch_targets;

    bool all_agree() const { return mismatches == 0; }
};

// Runs the family solver and the oracle on every target (or a seeded sample
// of distinct targets) of the family instance and compares decisions. Every
// solver Solution is validated by construction; Unsupported outcomes are
// counted but not treated as disagreement.
SweepResult sweep_family_full(const FamilySpec& spec, const SweepOptions& opts = {});
SweepResult sweep_family_sampled(const FamilySpec& spec, uint64_t count, uint64_t seed,
                                 const SweepOptions& opts = {});

}  // namespace aop
