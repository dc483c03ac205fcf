#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aop/core.hpp"

namespace aop {

enum class FamilyKind { Path, Cycle, Tree, Grid, Cylinder, Torus, QuasiTwoCylinder, Clique, Product };

const char* family_kind_name(FamilyKind k);
std::optional<FamilyKind> family_kind_from_name(const std::string& name);

// Product families use two parameters p (first factor) and q (second factor);
// 1-D families use p only; trees carry an explicit edge list.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int p = 0;
    int q = 0;
    std::vector<std::pair<int, int>> tree_edges;

    static FamilySpec path(int p) { return {FamilyKind::Path, p, 0, {}}; }
    static FamilySpec cycle(int p) { return {FamilyKind::Cycle, p, 0, {}}; }
    static FamilySpec tree(int n, std::vector<std::pair<int, int>> edges) {
        return {FamilyKind::Tree, n, 0, std::move(edges)};
    }
    static FamilySpec grid(int p, int q) { return {FamilyKind::Grid, p, q, {}}; }
    static FamilySpec cylinder(int p, int q) { return {FamilyKind::Cylinder, p, q, {}}; }
    static FamilySpec torus(int p, int q) { return {FamilyKind::Torus, p, q, {}}; }
    static FamilySpec quasi_two_cylinder(int p) { return {FamilyKind::QuasiTwoCylinder, p, 0, {}}; }
    static FamilySpec clique(int n) { return {FamilyKind::Clique, n, 0, {}}; }

    std::string describe() const;
};

// Maps family coordinates (i, j) to vertex ids and extracts the rows X_j and
// columns Y_i the constructions work with. Rows are copies of the first
// factor (one per second-factor vertex); columns the other way around.
struct CoordinateMap {
    FamilyKind kind = FamilyKind::Path;
    int p = 0;
    int q = 0;

    bool exists(int i, int j) const;
    int id(int i, int j) const;
    std::pair<int, int> coords(int v) const;

    std::vector<int> row(int j) const;                              // X_j
    std::vector<int> col(int i) const;                              // Y_i
    std::vector<int> row_section(int j, int i_lo, int i_hi) const;  // X_j^{[i_lo..i_hi]}
    std::vector<int> col_section(int i, int j_lo, int j_hi) const;  // Y_i^{[j_lo..j_hi]}
    std::vector<int> rows(int j_lo, int j_hi) const;                // X_{j_lo} u ... u X_{j_hi}
    std::vector<int> cols(int i_lo, int i_hi) const;
};

struct Family {
    Graph graph;
    FamilySpec spec;
    CoordinateMap coords;
};

// Builds the family graph with canonical row-major ids; throws InvalidParameters
// when the spec constraints are violated (cycle p >= 3, cylinder p >= 3,
// torus p,q >= 3, quasi 2-cylinder p >= 4, grid p,q >= 1).
Family build_family(const FamilySpec& spec);

// Recognizes canonically labeled family graphs (paths, cycles, cliques and
// trees in any labeling; grids, cylinders, tori and quasi 2-cylinders only in
// the row-major labeling build_family produces).
std::optional<FamilySpec> detect_family(const Graph& g);

enum class SymmetryKind { Transpose, FlipFirst, FlipSecond, RotateFirst, RotateSecond };

// Automorphisms (and the grid/torus transpose) used to rotate and reflect
// instances into the solvers' normal forms; amount only matters for rotations.
struct SymmetryTransform {
    SymmetryKind kind;
    int amount = 0;
};

struct RelabeledInstance {
    Instance image;
    FamilySpec image_spec;
    std::vector<int> to_image;    // original id -> image id
    std::vector<int> from_image;  // image id -> original id
};

// Applies the transform to a canonically labeled family instance; throws
// TransformNotApplicable when the transform is not an automorphism of the
// family (or, for Transpose, not defined for it).
RelabeledInstance apply_symmetry(const SymmetryTransform& t, const Instance& inst, const FamilySpec& spec);

// Pulls results on the image back to the original labeling.
Orientation pull_back(const Orientation& image_orientation, const RelabeledInstance& rel);
std::vector<int> pull_back(const std::vector<int>& image_vertices, const RelabeledInstance& rel);

}  // namespace aop
