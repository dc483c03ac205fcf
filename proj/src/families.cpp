#include "aop/families.hpp"

#include <algorithm>
#include <cassert>

namespace aop {

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Path: return "path";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::Tree: return "tree";
        case FamilyKind::Grid: return "grid";
        case FamilyKind::Cylinder: return "cylinder";
        case FamilyKind::Torus: return "torus";
        case FamilyKind::QuasiTwoCylinder: return "quasi2cyl";
        case FamilyKind::Clique: return "clique";
        case FamilyKind::Product: return "product";
    }
    return "?";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
    for (FamilyKind k : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Tree, FamilyKind::Grid,
                         FamilyKind::Cylinder, FamilyKind::Torus, FamilyKind::QuasiTwoCylinder,
                         FamilyKind::Clique, FamilyKind::Product}) {
        if (name == family_kind_name(k)) return k;
    }
    return std::nullopt;
}

std::string FamilySpec::describe() const {
    std::string s = family_kind_name(kind);
    if (q > 0) return s + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return s + "(" + std::to_string(p) + ")";
}

bool CoordinateMap::exists(int i, int j) const {
    if (i < 0 || i >= p || j < 0 || j >= q) return false;
    if (kind == FamilyKind::QuasiTwoCylinder) return !(i == 0 && j == 1);
    return true;
}

int CoordinateMap::id(int i, int j) const {
    if (!exists(i, j)) throw InvalidParameters("no vertex at these coordinates");
    if (kind == FamilyKind::QuasiTwoCylinder) {
        int base = 2 * i + j;
        return base > 1 ? base - 1 : base;
    }
    return i * q + j;
}

std::pair<int, int> CoordinateMap::coords(int v) const {
    if (kind == FamilyKind::QuasiTwoCylinder) {
        if (v == 0) return {0, 0};
        if (v % 2 == 1) return {(v + 1) / 2, 0};
        return {v / 2, 1};
    }
    return {v / q, v % q};
}

std::vector<int> CoordinateMap::row(int j) const { return row_section(j, 0, p - 1); }
std::vector<int> CoordinateMap::col(int i) const { return col_section(i, 0, q - 1); }

std::vector<int> CoordinateMap::row_section(int j, int i_lo, int i_hi) const {
    std::vector<int> r;
    for (int i = i_lo; i <= i_hi; ++i)
        if (exists(i, j)) r.push_back(id(i, j));
    return r;
}

std::vector<int> CoordinateMap::col_section(int i, int j_lo, int j_hi) const {
    std::vector<int> r;
    for (int j = j_lo; j <= j_hi; ++j)
        if (exists(i, j)) r.push_back(id(i, j));
    return r;
}

std::vector<int> CoordinateMap::rows(int j_lo, int j_hi) const {
    std::vector<int> r;
    for (int j = j_lo; j <= j_hi; ++j)
        for (int v : row(j)) r.push_back(v);
    return r;
}

std::vector<int> CoordinateMap::cols(int i_lo, int i_hi) const {
    std::vector<int> r;
    for (int i = i_lo; i <= i_hi; ++i)
        for (int v : col(i)) r.push_back(v);
    return r;
}

namespace {

Graph path_graph(int p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
    return Graph(p, std::move(edges));
}

Graph cycle_graph(int p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i) edges.emplace_back(i, (i + 1) % p);
    return Graph(p, std::move(edges));
}

Graph clique_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

Family build_family(const FamilySpec& spec) {
    Family fam;
    fam.spec = spec;
    fam.coords.kind = spec.kind;
    switch (spec.kind) {
        case FamilyKind::Path:
            if (spec.p < 1) throw InvalidParameters("path requires p >= 1");
            fam.graph = path_graph(spec.p);
            fam.coords.p = spec.p;
            fam.coords.q = 1;
            break;
        case FamilyKind::Cycle:
            if (spec.p < 3) throw InvalidParameters("cycle requires p >= 3");
            fam.graph = cycle_graph(spec.p);
            fam.coords.p = spec.p;
            fam.coords.q = 1;
            break;
        case FamilyKind::Tree: {
            if (spec.p < 1) throw InvalidParameters("tree requires at least one vertex");
            Graph g(spec.p, spec.tree_edges);
            if (g.edge_count() != spec.p - 1 || !g.connected())
                throw InvalidParameters("edge list is not a tree");
            fam.graph = std::move(g);
            fam.coords.p = spec.p;
            fam.coords.q = 1;
            break;
        }
        case FamilyKind::Grid:
            if (spec.p < 1 || spec.q < 1) throw InvalidParameters("grid requires p,q >= 1");
            fam.graph = cartesian_product(path_graph(spec.p), path_graph(spec.q));
            fam.coords.p = spec.p;
            fam.coords.q = spec.q;
            break;
        case FamilyKind::Cylinder:
            if (spec.p < 3 || spec.q < 1) throw InvalidParameters("cylinder requires p >= 3 and q >= 1");
            fam.graph = cartesian_product(cycle_graph(spec.p), path_graph(spec.q));
            fam.coords.p = spec.p;
            fam.coords.q = spec.q;
            break;
        case FamilyKind::Torus:
            if (spec.p < 3 || spec.q < 3) throw InvalidParameters("torus requires p,q >= 3");
            fam.graph = cartesian_product(cycle_graph(spec.p), cycle_graph(spec.q));
            fam.coords.p = spec.p;
            fam.coords.q = spec.q;
            break;
        case FamilyKind::QuasiTwoCylinder: {
            if (spec.p < 4) throw InvalidParameters("quasi 2-cylinder requires p >= 4");
            Graph base = cartesian_product(cycle_graph(spec.p), path_graph(2));
            // Remove vertex (u_0, v_1), base id 1, and compact the ids.
            std::vector<std::pair<int, int>> edges;
            for (auto [a, b] : base.edges()) {
                if (a == 1 || b == 1) continue;
                edges.emplace_back(a > 1 ? a - 1 : a, b > 1 ? b - 1 : b);
            }
            fam.graph = Graph(2 * spec.p - 1, std::move(edges));
            fam.coords.p = spec.p;
            fam.coords.q = 2;
            break;
        }
        case FamilyKind::Clique:
            if (spec.p < 1) throw InvalidParameters("clique requires p >= 1");
            fam.graph = clique_graph(spec.p);
            fam.coords.p = spec.p;
            fam.coords.q = 1;
            break;
        case FamilyKind::Product:
            throw InvalidParameters("generic products are built via cartesian_product");
    }
    return fam;
}

namespace {

bool is_tree_shape(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && g.connected();
}

bool is_cycle_shape(const Graph& g) {
    if (g.vertex_count() < 3 || !g.connected()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_clique_shape(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

std::optional<FamilySpec> detect_family(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) return std::nullopt;
    auto matches = [&](const FamilySpec& spec) {
        try {
            return build_family(spec).graph == g;
        } catch (const InvalidParameters&) {
            return false;
        }
    };
    for (int p = 3; p <= n / 3; ++p) {
        if (n % p != 0) continue;
        FamilySpec spec = FamilySpec::torus(p, n / p);
        if (matches(spec)) return spec;
    }
    for (int p = 3; p <= n; ++p) {
        if (n % p != 0) continue;
        FamilySpec spec = FamilySpec::cylinder(p, n / p);
        if (matches(spec)) return spec;
    }
    if (n % 2 == 1 && matches(FamilySpec::quasi_two_cylinder((n + 1) / 2)))
        return FamilySpec::quasi_two_cylinder((n + 1) / 2);
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        FamilySpec spec = FamilySpec::grid(p, n / p);
        if (matches(spec)) return spec;
    }
    if (is_cycle_shape(g)) return FamilySpec::cycle(n);
    if (n >= 2 && is_clique_shape(g)) return FamilySpec::clique(n);
    if (is_tree_shape(g)) return FamilySpec::tree(n, g.edges());
    return std::nullopt;
}

namespace {

struct FactorShape {
    bool first_cyclic = false;
    bool second_cyclic = false;
    bool has_second = false;
};

FactorShape factor_shape(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Path: return {false, false, false};
        case FamilyKind::Cycle: return {true, false, false};
        case FamilyKind::Grid: return {false, false, true};
        case FamilyKind::Cylinder: return {true, false, true};
        case FamilyKind::Torus: return {true, true, true};
        case FamilyKind::QuasiTwoCylinder: return {true, false, true};
        default: throw TransformNotApplicable("family has no coordinate symmetry");
    }
}

}  // namespace

RelabeledInstance apply_symmetry(const SymmetryTransform& t, const Instance& inst, const FamilySpec& spec) {
    Family fam = build_family(spec);
    if (fam.graph != inst.graph) throw TransformNotApplicable("instance is not canonically labeled for the family");
    FactorShape shape = factor_shape(spec.kind);
    const CoordinateMap& cm = fam.coords;
    int n = inst.graph.vertex_count();

    FamilySpec image_spec = spec;
    std::vector<int> to_image(n, -1);
    auto map_all = [&](auto&& f) {
        for (int v = 0; v < n; ++v) {
            auto [i, j] = cm.coords(v);
            auto [i2, j2] = f(i, j);
            to_image[v] = cm.id(i2, j2);
        }
    };

    switch (t.kind) {
        case SymmetryKind::Transpose: {
            if (spec.kind != FamilyKind::Grid && spec.kind != FamilyKind::Torus)
                throw TransformNotApplicable("transpose requires a grid or a torus");
            image_spec.p = spec.q;
            image_spec.q = spec.p;
            CoordinateMap im = build_family(image_spec).coords;
            for (int v = 0; v < n; ++v) {
                auto [i, j] = cm.coords(v);
                to_image[v] = im.id(j, i);
            }
            break;
        }
        case SymmetryKind::FlipFirst:
            if (spec.kind == FamilyKind::QuasiTwoCylinder) {
                // Reflection fixing u_0 keeps the removed vertex in place.
                map_all([&](int i, int j) { return std::pair{(cm.p - i) % cm.p, j}; });
            } else if (shape.first_cyclic) {
                map_all([&](int i, int j) { return std::pair{(cm.p - i) % cm.p, j}; });
            } else {
                map_all([&](int i, int j) { return std::pair{cm.p - 1 - i, j}; });
            }
            break;
        case SymmetryKind::FlipSecond:
            if (!shape.has_second || spec.kind == FamilyKind::QuasiTwoCylinder)
                throw TransformNotApplicable("no second-factor flip for this family");
            if (shape.second_cyclic)
                map_all([&](int i, int j) { return std::pair{i, (cm.q - j) % cm.q}; });
            else
                map_all([&](int i, int j) { return std::pair{i, cm.q - 1 - j}; });
            break;
        case SymmetryKind::RotateFirst:
            if (!shape.first_cyclic || spec.kind == FamilyKind::QuasiTwoCylinder)
                throw TransformNotApplicable("first factor is not a rotatable cycle");
            map_all([&](int i, int j) { return std::pair{((i + t.amount) % cm.p + cm.p) % cm.p, j}; });
            break;
        case SymmetryKind::RotateSecond:
            if (!shape.second_cyclic)
                throw TransformNotApplicable("second factor is not a rotatable cycle");
            map_all([&](int i, int j) { return std::pair{i, ((j + t.amount) % cm.q + cm.q) % cm.q}; });
            break;
    }

    Graph image_graph = build_family(image_spec).graph;
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(inst.graph.edge_count());
    for (auto [u, v] : inst.graph.edges()) mapped.emplace_back(to_image[u], to_image[v]);
    if (Graph(n, mapped) != image_graph) throw TransformNotApplicable("transform is not an automorphism");

    RelabeledInstance rel;
    rel.image_spec = image_spec;
    rel.to_image = to_image;
    rel.from_image.assign(n, -1);
    for (int v = 0; v < n; ++v) rel.from_image[to_image[v]] = v;
    VertexSet image_target(n);
    for (int v = 0; v < n; ++v)
        if (inst.target.test(v)) image_target.set(to_image[v]);
    rel.image = Instance(std::move(image_graph), std::move(image_target));
    return rel;
}

Orientation pull_back(const Orientation& image_orientation, const RelabeledInstance& rel) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(image_orientation.arcs.size());
    for (auto [a, b] : image_orientation.arcs) arcs.emplace_back(rel.from_image[a], rel.from_image[b]);
    return Orientation(std::move(arcs));
}

std::vector<int> pull_back(const std::vector<int>& image_vertices, const RelabeledInstance& rel) {
    std::vector<int> r;
    r.reserve(image_vertices.size());
    for (int v : image_vertices) r.push_back(rel.from_image[v]);
    return r;
}

}  // namespace aop
