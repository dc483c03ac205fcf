#pragma once

#include <array>
#include <optional>
#include <string>

#include "aop/decomp.hpp"
#include "aop/families.hpp"
#include "aop/oracle.hpp"

namespace aop {

enum class SolveStatus { Solved, NoSolution, ConditionViolated, Unsupported };

enum class NoSolutionReason { None, BadGridInstance, CliqueSizeCriterion, ExhaustiveSearch };

struct SolveOutcome {
    SolveStatus status = SolveStatus::NoSolution;
    Orientation orientation;          // when Solved; always validated
    EliminationOrder order;           // when Solved
    NoSolutionReason reason = NoSolutionReason::None;
    Condition violated = Condition::P;
    std::string note;

    bool solved() const { return status == SolveStatus::Solved; }

    static SolveOutcome make_solved(Orientation o, EliminationOrder ord);
    static SolveOutcome make_no_solution(NoSolutionReason r);
    static SolveOutcome make_condition_violated(Condition c);
    static SolveOutcome make_unsupported(std::string note);
};

// Trees and paths: a solution exists iff P holds. Construction processes the
// vertices leaves-to-root, each non-root vertex fixing its parent edge to
// repair its own in-degree parity. Throws NotATree.
SolveOutcome solve_tree(const Instance& inst);

// Cycles: a solution exists iff P and S hold. Throws NotACycle.
SolveOutcome solve_cycle(const Instance& inst);

// Variant that makes the chosen vertex (required outside T) a source.
SolveOutcome solve_cycle_with_source(const Instance& inst, int source);

struct BadPathWitness {
    bool even_vertex_count = false;
    bool endpoints_in_target = false;
    std::vector<bool> pair_uniform;  // one flag per interior consecutive pair
    bool bad = false;
};

// Evaluates the bad-path-instance predicate along the canonical endpoint
// order (lowest-id endpoint first). Throws NotAPath.
BadPathWitness is_bad_path_instance(const Instance& inst);

enum class SectionSide { Prefix, Suffix };

// On an even path that is not a bad path instance, returns the smallest k
// (and which end) such that the odd-vertex-count end section (the first or
// last 2k+1 vertices) contains an even number of target vertices. Endpoint
// checks come first, then the smallest non-uniform pair. Throws
// IsBadPathInstance (and PreconditionViolated for odd paths).
std::pair<int, SectionSide> even_endpoint_section(const Instance& inst);

struct BadGridWitness {
    bool dims_even = false;
    std::array<BadPathWitness, 4> sides;  // Y_0, Y_{p-1}, X_0, X_{q-1}
    bool interior_covered = false;
    bool bad = false;
};

// Bad-grid-instance predicate for canonically labeled grids. Throws NotAGrid.
BadGridWitness is_bad_grid_instance(const Instance& inst);

// Grid characterization: with P checked at entry, NoSolution exactly on bad
// grid instances, a validated Solution otherwise. Throws NotAGrid.
SolveOutcome solve_grid(const Instance& inst);

// Cylinders C_p [] P_q, p >= 3: a Solution for every T passing the entry
// conditions (P alone suffices when p is odd and q even; P,S,Sbar otherwise).
SolveOutcome solve_cylinder(const Instance& inst);

// Quasi 2-cylinders Q_p, p >= 4 (C_p [] P_2 minus (u_0,v_1)).
SolveOutcome solve_quasi_two_cylinder(const Instance& inst);

// Tori C_p [] C_q: Unsupported when a dimension is 3, otherwise a Solution
// for every T satisfying P,S,Sbar.
SolveOutcome solve_torus(const Instance& inst);

// Cliques: a Solution iff |T| = floor(n/2).
SolveOutcome solve_clique(const Instance& inst);

// Dispatches to a family solver via the hint (validated) or shape detection,
// falling back to the oracle within its cap.
SolveOutcome solve(const Instance& inst, const std::optional<FamilySpec>& hint = std::nullopt,
                   const OracleOptions& opts = {});

// Dispatch by family spec; the instance must be canonically labeled.
SolveOutcome solve_family(const Instance& inst, const FamilySpec& spec);

}  // namespace aop
