#include "aop/io.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace aop {

using nlohmann::json;

namespace {

json instance_json(const Instance& inst, const std::optional<FamilySpec>& family, bool with_labels) {
    json j;
    j["n"] = inst.graph.vertex_count();
    json edges = json::array();
    for (auto [u, v] : inst.graph.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["t"] = inst.target.to_vector();
    if (family) {
        json f;
        f["kind"] = family_kind_name(family->kind);
        f["p"] = family->p;
        if (family->q > 0) f["q"] = family->q;
        j["family"] = std::move(f);
        if (with_labels && family->kind != FamilyKind::Tree) {
            CoordinateMap cm = build_family(*family).coords;
            std::vector<std::string> labels(inst.graph.vertex_count());
            for (int v = 0; v < inst.graph.vertex_count(); ++v) {
                auto [i, jj] = cm.coords(v);
                labels[v] = std::to_string(i) + "," + std::to_string(jj);
            }
            j["labels"] = std::move(labels);
        }
    }
    return j;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges")) throw ParseError("instance requires \"n\" and \"edges\"");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<int> t;
    if (j.contains("t")) t = j["t"].get<std::vector<int>>();
    InstanceFile file;
    try {
        file.instance = Instance(Graph(n, std::move(edges)), t);
    } catch (const InvalidParameters& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
    if (j.contains("family")) {
        const auto& f = j["family"];
        auto kind = family_kind_from_name(f.value("kind", std::string{}));
        if (!kind) throw ParseError("unknown family kind");
        FamilySpec spec;
        spec.kind = *kind;
        spec.p = f.value("p", 0);
        spec.q = f.value("q", 0);
        if (spec.kind == FamilyKind::Tree) spec.tree_edges = file.instance.graph.edges();
        Family fam = build_family(spec);
        if (fam.graph != file.instance.graph) throw ParseError("family block does not match the edge set");
        file.family = spec;
    }
    if (j.contains("labels")) {
        file.labels = j["labels"].get<std::vector<std::string>>();
        if (file.labels.size() != static_cast<size_t>(n)) throw ParseError("labels must cover all vertices");
    }
    return file;
}

InstanceFile read_instance(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string instance_to_json(const Instance& inst, const std::optional<FamilySpec>& family,
                             bool with_labels) {
    return instance_json(inst, family, with_labels).dump();
}

std::string orientation_to_json(const Orientation& o) {
    json arcs = json::array();
    for (auto [a, b] : o.arcs) arcs.push_back({a, b});
    return json{{"arcs", std::move(arcs)}}.dump();
}

Orientation parse_orientation(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("arcs")) throw ParseError("orientation requires \"arcs\"");
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2) throw ParseError("arcs must be [from,to] pairs");
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return Orientation(std::move(arcs));
}

std::string order_to_json(const EliminationOrder& ord) { return json{{"order", ord.order}}.dump(); }

EliminationOrder parse_order(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("order")) throw ParseError("order requires \"order\"");
    return {j["order"].get<std::vector<int>>()};
}

std::string to_dot(const Instance& inst, const Orientation* orientation,
                   const std::vector<std::string>* labels) {
    std::ostringstream out;
    bool directed = orientation != nullptr;
    out << (directed ? "digraph" : "graph") << " aop {\n";
    out << "  node [shape=circle style=filled];\n";
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        out << "  " << v << " [";
        if (labels && v < static_cast<int>(labels->size())) out << "label=\"" << (*labels)[v] << "\" ";
        if (inst.target.test(v))
            out << "fillcolor=black fontcolor=white";
        else
            out << "fillcolor=white";
        out << "];\n";
    }
    if (directed) {
        for (auto [a, b] : orientation->arcs) out << "  " << a << " -> " << b << ";\n";
    } else {
        for (auto [u, v] : inst.graph.edges()) out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace aop
