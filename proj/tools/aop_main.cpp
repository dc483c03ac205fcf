// Command-line front end: instance generation, solving, checking,
// classification, solver-vs-oracle verification sweeps and DOT export.
//
// Exit codes: 0 solved/true, 1 no-solution/false, 2 condition violated,
// 3 usage or input error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aop/classes.hpp"
#include "aop/io.hpp"
#include "aop/solvers.hpp"
#include "aop/verify.hpp"

using namespace aop;
using nlohmann::json;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitConditionViolated = 2;
constexpr int kExitUsage = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text << "\n";
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
    // "0-1,1-2" or "0-1 1-2"
    std::vector<std::pair<int, int>> edges;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream pair_in(token);
        std::string part;
        std::vector<int> ends;
        while (std::getline(pair_in, part, '-')) ends.push_back(std::stoi(part));
        if (ends.size() != 2) throw ParseError("edge token must be u-v: " + token);
        edges.emplace_back(ends[0], ends[1]);
    }
    return edges;
}

FamilySpec spec_from_options(const std::string& kind_name, int p, int q, const std::string& edges,
                             uint64_t seed) {
    auto kind = family_kind_from_name(kind_name);
    if (!kind) throw ParseError("unknown family: " + kind_name);
    FamilySpec spec;
    spec.kind = *kind;
    spec.p = p;
    spec.q = q;
    if (spec.kind == FamilyKind::Tree) {
        if (!edges.empty()) {
            spec.tree_edges = parse_edge_list(edges);
            if (spec.p == 0)
                for (auto [u, v] : spec.tree_edges) spec.p = std::max({spec.p, u + 1, v + 1});
        } else {
            if (p < 1) throw ParseError("random tree needs --p");
            std::mt19937_64 rng(seed);
            for (int v = 1; v < p; ++v)
                spec.tree_edges.emplace_back(static_cast<int>(rng() % v), v);
        }
    }
    return spec;
}

VertexSet build_target(const Graph& g, const std::string& t_spec, const std::string& t_ids,
                       int t_size, uint64_t seed) {
    int n = g.vertex_count();
    VertexSet t(n);
    if (t_spec == "none") return t;
    if (t_spec == "all") {
        for (int v = 0; v < n; ++v) t.set(v);
        return t;
    }
    if (t_spec == "odd-degree") {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) % 2 == 1) t.set(v);
        return t;
    }
    if (t_spec == "random") {
        std::mt19937_64 rng(seed);
        if (t_size < 0) {
            for (int v = 0; v < n; ++v)
                if (rng() % 2) t.set(v);
        } else {
            if (t_size > n) throw ParseError("--t-size larger than the vertex count");
            std::vector<int> ids(n);
            for (int v = 0; v < n; ++v) ids[v] = v;
            std::shuffle(ids.begin(), ids.end(), rng);
            for (int k = 0; k < t_size; ++k) t.set(ids[k]);
        }
        return t;
    }
    if (t_spec == "ids") {
        std::istringstream in(t_ids);
        std::string token;
        while (std::getline(in, token, ',')) {
            int v = std::stoi(token);
            if (v < 0 || v >= n) throw ParseError("target id out of range: " + token);
            t.set(v);
        }
        return t;
    }
    throw ParseError("unknown --t spec: " + t_spec);
}

json outcome_to_json(const SolveOutcome& out) {
    json j;
    switch (out.status) {
        case SolveStatus::Solved: {
            j["status"] = "solved";
            json arcs = json::array();
            for (auto [a, b] : out.orientation.arcs) arcs.push_back({a, b});
            j["arcs"] = std::move(arcs);
            j["order"] = out.order.order;
            break;
        }
        case SolveStatus::NoSolution:
            j["status"] = "no-solution";
            j["reason"] = out.reason == NoSolutionReason::BadGridInstance    ? "bad-grid-instance"
                          : out.reason == NoSolutionReason::CliqueSizeCriterion ? "clique-size-criterion"
                                                                               : "exhaustive-search";
            break;
        case SolveStatus::ConditionViolated:
            j["status"] = "condition-violated";
            j["condition"] = condition_name(out.violated);
            break;
        case SolveStatus::Unsupported:
            j["status"] = "unsupported";
            j["note"] = out.note;
            break;
    }
    return j;
}

int exit_code_for(const SolveOutcome& out) {
    switch (out.status) {
        case SolveStatus::Solved: return kExitSolved;
        case SolveStatus::NoSolution: return kExitNoSolution;
        case SolveStatus::ConditionViolated: return kExitConditionViolated;
        case SolveStatus::Unsupported: return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acyclic T-odd orientation toolkit"};
    app.require_subcommand(1);

    // --- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a family instance as JSON");
    std::string gen_family, gen_edges, gen_t = "none", gen_t_ids, gen_out;
    int gen_p = 0, gen_q = 0, gen_t_size = -1;
    uint64_t gen_seed = 1;
    gen->add_option("--family", gen_family, "path|cycle|tree|grid|cylinder|torus|quasi2cyl|clique")
        ->required();
    gen->add_option("--p", gen_p, "first parameter");
    gen->add_option("--q", gen_q, "second parameter");
    gen->add_option("--edges", gen_edges, "explicit tree edge list, e.g. 0-1,1-2");
    gen->add_option("--t", gen_t, "target set: all|none|odd-degree|random|ids");
    gen->add_option("--t-ids", gen_t_ids, "comma-separated ids for --t ids");
    gen->add_option("--t-size", gen_t_size, "target size for --t random");
    gen->add_option("--seed", gen_seed, "seed for --t random and random trees");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // --- solve -------------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
    std::string solve_in = "-", solve_method = "auto", solve_out;
    solve_cmd->add_option("--instance", solve_in, "instance JSON file (default stdin)");
    solve_cmd->add_option("--method", solve_method, "auto|oracle|family");
    solve_cmd->add_option("--out", solve_out, "output file (default stdout)");

    // --- check -------------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "validate an orientation or an order");
    std::string check_in = "-", check_orientation, check_order;
    check_cmd->add_option("--instance", check_in, "instance JSON file (default stdin)");
    check_cmd->add_option("--orientation", check_orientation, "orientation JSON file");
    check_cmd->add_option("--order", check_order, "elimination order JSON file");

    // --- classify ----------------------------------------------------------
    auto* classify_cmd = app.add_subcommand("classify", "oracle class membership for all 7 classes");
    std::string classify_in = "-";
    int classify_cap = 20;
    classify_cmd->add_option("--instance", classify_in, "instance JSON file (default stdin)");
    classify_cmd->add_option("--cap", classify_cap, "enumeration cap (vertices)");

    // --- verify ------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "solver-vs-oracle sweep over targets");
    std::string verify_family, verify_sweep = "full";
    int verify_p = 0, verify_q = 0, verify_threads = 1;
    uint64_t verify_seed = 1;
    verify_cmd->add_option("--family", verify_family, "family kind")->required();
    verify_cmd->add_option("--p", verify_p, "first parameter")->required();
    verify_cmd->add_option("--q", verify_q, "second parameter");
    verify_cmd->add_option("--sweep", verify_sweep, "full or sample:N");
    verify_cmd->add_option("--seed", verify_seed, "sampling seed");
    verify_cmd->add_option("--threads", verify_threads, "worker threads");

    // --- export-dot ----------------------------------------------------------
    auto* dot_cmd = app.add_subcommand("export-dot", "emit Graphviz DOT (T filled black)");
    std::string dot_in = "-", dot_orientation, dot_out;
    dot_cmd->add_option("--instance", dot_in, "instance JSON file (default stdin)");
    dot_cmd->add_option("--orientation", dot_orientation, "orientation JSON file (directed output)");
    dot_cmd->add_option("--out", dot_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            FamilySpec spec = spec_from_options(gen_family, gen_p, gen_q, gen_edges, gen_seed);
            Family fam = build_family(spec);
            VertexSet t = build_target(fam.graph, gen_t, gen_t_ids, gen_t_size, gen_seed);
            emit(instance_to_json(Instance(fam.graph, t), spec), gen_out);
            return kExitSolved;
        }
        if (*solve_cmd) {
            InstanceFile file = parse_instance(slurp(solve_in));
            SolveOutcome out;
            if (solve_method == "oracle") {
                OracleOptions opts;
                if (auto witness = decide_exists(file.instance, opts)) {
                    Orientation o = order_to_orientation(file.instance, *witness);
                    out = SolveOutcome::make_solved(o, *witness);
                } else {
                    out = SolveOutcome::make_no_solution(NoSolutionReason::ExhaustiveSearch);
                }
            } else if (solve_method == "family") {
                std::optional<FamilySpec> spec = file.family;
                if (!spec) spec = detect_family(file.instance.graph);
                if (!spec) throw ParseError("no family recognized; try --method oracle");
                out = solve_family(file.instance, *spec);
            } else if (solve_method == "auto") {
                out = solve(file.instance, file.family);
            } else {
                throw ParseError("unknown --method: " + solve_method);
            }
            emit(outcome_to_json(out).dump(), solve_out);
            return exit_code_for(out);
        }
        if (*check_cmd) {
            InstanceFile file = parse_instance(slurp(check_in));
            if (check_orientation.empty() == check_order.empty())
                throw ParseError("check needs exactly one of --orientation / --order");
            json j;
            bool valid;
            if (!check_orientation.empty()) {
                Orientation o = parse_orientation(slurp(check_orientation));
                ValidationReport report = validate_orientation(file.instance, o);
                valid = report.ok();
                j["acyclic"] = report.acyclic;
                j["t_odd"] = report.t_odd;
                if (!report.acyclic) j["cycle"] = report.cycle_witness;
                if (!report.t_odd && report.parity_witness >= 0) j["parity_vertex"] = report.parity_witness;
            } else {
                EliminationOrder ord = parse_order(slurp(check_order));
                PlayCheck report = validate_elimination_order(file.instance, ord);
                valid = report.valid;
                if (!report.valid) j["first_violation"] = report.first_violation;
            }
            j["valid"] = valid;
            emit(j.dump(), "");
            return valid ? kExitSolved : kExitNoSolution;
        }
        if (*classify_cmd) {
            InstanceFile file = parse_instance(slurp(classify_in));
            OracleOptions opts;
            opts.enumeration_cap = classify_cap;
            opts.vertex_cap = std::max(classify_cap, opts.vertex_cap);
            ClassReport report = classify_graph(file.instance.graph, opts);
            StructuralProfile profile = structural_profile(file.instance.graph);
            json j;
            const char* names[8] = {"",     "C_P",   "C_S",      "C_PS",
                                    "C_Sb", "C_PSb", "C_SSb",    "C_PSSb"};
            for (int bits = 1; bits <= 7; ++bits) {
                json entry;
                entry["member"] = report.member[bits];
                entry["targets_checked"] = report.checked[bits];
                if (report.counterexample[bits])
                    entry["counterexample_t"] = report.counterexample[bits]->target.to_vector();
                j[names[bits]] = std::move(entry);
            }
            j["connected"] = profile.connected;
            j["eulerian"] = profile.eulerian;
            j["all_degrees_even"] = profile.all_degrees_even;
            j["vertex_edge_parity"] = profile.vertex_edge_parity;
            emit(j.dump(), "");
            return kExitSolved;
        }
        if (*verify_cmd) {
            FamilySpec spec = spec_from_options(verify_family, verify_p, verify_q, "", 1);
            SweepOptions opts;
            opts.threads = verify_threads;
            SweepResult r;
            if (verify_sweep == "full") {
                r = sweep_family_full(spec, opts);
            } else if (verify_sweep.rfind("sample:", 0) == 0) {
                uint64_t count = std::stoull(verify_sweep.substr(7));
                r = sweep_family_sampled(spec, count, verify_seed, opts);
            } else {
                throw ParseError("unknown --sweep: " + verify_sweep);
            }
            json j;
            j["family"] = spec.describe();
            j["targets"] = r.targets;
            j["solver_solved"] = r.solver_solved;
            j["solver_no_solution"] = r.solver_no_solution;
            j["solver_condition_violated"] = r.solver_condition_violated;
            j["solver_unsupported"] = r.solver_unsupported;
            j["oracle_solvable"] = r.oracle_solvable;
            j["conditions_satisfied"] = r.conditions_satisfied;
            j["conditions_satisfied_unsolvable"] = r.conditions_satisfied_unsolvable;
            j["mismatches"] = r.mismatches;
            if (!r.mismatch_targets.empty()) j["mismatch_targets"] = r.mismatch_targets;
            emit(j.dump(), "");
            return r.all_agree() ? kExitSolved : kExitNoSolution;
        }
        if (*dot_cmd) {
            InstanceFile file = parse_instance(slurp(dot_in));
            std::string dot;
            if (!dot_orientation.empty()) {
                Orientation o = parse_orientation(slurp(dot_orientation));
                dot = to_dot(file.instance, &o, file.labels.empty() ? nullptr : &file.labels);
            } else {
                dot = to_dot(file.instance, nullptr, file.labels.empty() ? nullptr : &file.labels);
            }
            emit(dot, dot_out);
            return kExitSolved;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
