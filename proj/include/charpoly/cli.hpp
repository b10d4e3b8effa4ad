#ifndef CHARPOLY_CLI_HPP
#define CHARPOLY_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "charpoly/builtins.hpp"
#include "charpoly/json_io.hpp"

namespace charpoly {

// Everything the command surface needs; the binary only parses flags into
// this and calls run(). Identical configs produce byte-identical artifacts
// regardless of worker count.
struct RunConfig {
    std::string command;    // build | vertices | lattice-points | reflexive |
                            // idp | rays | classify | verify-paper
    std::string graph;      // file path or builtin name
    std::string tree_spec;  // "", "all", or comma-separated edge ids
    int k_max = 3;
    int genus = 2;
    std::string output;          // empty = stdout
    std::string format = "json";  // json | table
    unsigned workers = 0;         // 0 = pick a default
    size_t point_cap = 10000000;

    std::string polytope = "Q";              // build/vertices/lattice-points: P | Q | 3P | delta
    std::string ray_kind = "anticanonical";  // rays: anticanonical | dual-cone
    bool leaf_nonneg = true;                 // delta: keep leaf edges nonnegative
    bool stretch = false;
    double budget_seconds = 1800;
    std::ostream* out_stream = nullptr;  // overrides `output` when set (tests)
};

namespace cli_detail {

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

inline unsigned resolve_workers(const RunConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    if (const char* env = std::getenv("CHARPOLY_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return static_cast<unsigned>(w);
    }
    if (cfg.command == "classify") {
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? std::min(hw, 8u) : 1u;
    }
    return 1;
}

inline ParsedGraph load_graph(const std::string& spec) {
    if (auto g = builtin_graph(spec)) return {*g, std::nullopt};
    std::ifstream in(spec);
    if (!in) throw UsageError("graph: no builtin or readable file named '" + spec + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph_text(ss.str());
}

inline std::vector<int> parse_id_list(const std::string& spec) {
    std::vector<int> ids;
    std::string tok;
    std::istringstream ss(spec);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ids.push_back(std::stoi(tok));
    }
    return ids;
}

// The trees a command runs over: an explicit id list, "all" tree classes, a
// tree line from the graph file, or the lexicographically first tree.
inline std::vector<SpanningTree> resolve_trees(const Multigraph& g, const ParsedGraph& pg,
                                               const std::string& spec) {
    if (spec == "all") return spanning_tree_classes(g);
    if (!spec.empty()) {
        try {
            return {SpanningTree::of(g, parse_id_list(spec))};
        } catch (const InvalidTree& e) {
            throw UsageError(std::string("tree: ") + e.what());
        } catch (const std::exception&) {
            throw UsageError("tree: expected comma-separated edge ids or 'all'");
        }
    }
    if (pg.tree_ids) return {SpanningTree::of(g, *pg.tree_ids)};
    auto all = spanning_trees(g);
    if (all.empty()) throw UsageError("graph has no spanning tree");
    return {all.front()};
}

inline std::string table_of_vectors(const std::vector<EdgeVector>& vs, const std::string& head) {
    std::ostringstream os;
    os << head << " (" << vs.size() << ")\n";
    for (const auto& v : vs) {
        for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "  ") << rat_str(v[i]);
        os << "\n";
    }
    return os.str();
}

}  // namespace cli_detail

// Executes one command; returns the process exit status (0 success,
// 1 verdict-suite failure, 2 usage error).
inline int run(const RunConfig& cfg) {
    using cli_detail::UsageError;
    try {
        if (cfg.point_cap == 0) throw UsageError("point-cap must be positive");
        std::ostringstream buffer;
        int status = 0;
        const bool table = cfg.format == "table";
        if (!table && cfg.format != "json") throw UsageError("format must be json or table");

        auto emit_json = [&](const json& j) { buffer << j.dump(2) << "\n"; };

        auto build_polytope = [&](const Multigraph& g, const SpanningTree* t) -> HPolytope {
            if (cfg.polytope == "delta") return polytope_Delta(g, cfg.leaf_nonneg);
            if (!t) throw UsageError("this polytope needs a spanning tree");
            if (cfg.polytope == "P") return polytope_P(g, *t);
            if (cfg.polytope == "Q") return polytope_Q(g, *t);
            if (cfg.polytope == "3P") return dilate(polytope_P(g, *t), 3);
            throw UsageError("polytope must be P, Q, 3P, or delta");
        };
        auto lattice_for = [&](const Multigraph& g) -> GraphLattice {
            if (cfg.polytope == "delta") return GraphLattice::even(g.edge_count());
            return m_lattice(g);
        };

        if (cfg.command == "build" || cfg.command == "vertices" ||
            cfg.command == "lattice-points" || cfg.command == "reflexive" ||
            cfg.command == "idp" || cfg.command == "rays") {
            if (cfg.graph.empty()) throw UsageError("--graph is required");
            auto pg = cli_detail::load_graph(cfg.graph);
            const Multigraph& g = pg.graph;
            std::vector<SpanningTree> trees;
            if (cfg.polytope == "delta" &&
                (cfg.command == "build" || cfg.command == "vertices" ||
                 cfg.command == "lattice-points")) {
                trees = {};  // delta needs no spanning tree
            } else {
                trees = cli_detail::resolve_trees(g, pg, cfg.tree_spec);
            }

            json results = json::array();
            std::ostringstream tbl;
            auto one = [&](const SpanningTree* t) {
                if (cfg.command == "build") {
                    HPolytope p = build_polytope(g, t);
                    if (table) tbl << to_json(p).dump(2) << "\n";
                    else results.push_back(to_json(p));
                } else if (cfg.command == "vertices") {
                    VPolytope v = vertices(build_polytope(g, t));
                    if (table) tbl << cli_detail::table_of_vectors(v.vertices, "vertices");
                    else results.push_back(to_json(v));
                } else if (cfg.command == "lattice-points") {
                    auto pts = lattice_points(build_polytope(g, t), lattice_for(g),
                                              cfg.point_cap);
                    if (table) tbl << cli_detail::table_of_vectors(pts, "lattice points");
                    else results.push_back(json{{"count", pts.size()},
                                                {"points", [&] {
                                                     json a = json::array();
                                                     for (const auto& p : pts)
                                                         a.push_back(to_json(p));
                                                     return a;
                                                 }()}});
                } else if (cfg.command == "reflexive") {
                    auto r = check_reflexive(g, *t);
                    if (table)
                        tbl << "tree {" << [&] {
                            std::string s;
                            for (int e : t->tree_edges()) s += std::to_string(e) + " ";
                            return s;
                        }() << "} reflexive: " << (r.reflexive ? "yes" : "no") << "\n";
                    else {
                        json j = to_json(r);
                        j["tree"] = t->tree_edges();
                        results.push_back(j);
                    }
                } else if (cfg.command == "idp") {
                    if (cfg.k_max < 2) throw UsageError("k-max must be at least 2");
                    auto r = check_idp(g, *t, cfg.k_max, cfg.point_cap);
                    if (table)
                        tbl << "idp up to " << r.k_max << ": "
                            << (r.indeterminate ? "indeterminate"
                                                : (r.failures.empty() ? "holds" : "fails"))
                            << "\n";
                    else {
                        json j = to_json(r);
                        j["tree"] = t->tree_edges();
                        results.push_back(j);
                    }
                } else if (cfg.command == "rays") {
                    std::vector<DivisorRay> rays;
                    if (cfg.ray_kind == "anticanonical") rays = anticanonical_rays(g, *t);
                    else if (cfg.ray_kind == "dual-cone") rays = dual_cone_rays(g, *t);
                    else throw UsageError("ray kind must be anticanonical or dual-cone");
                    if (table) {
                        for (const auto& r : rays)
                            tbl << r.label << "  " << vec_str(r.generator) << "\n";
                    } else {
                        json j = to_json(rays);
                        j["tree"] = t->tree_edges();
                        results.push_back(j);
                    }
                }
            };
            if (trees.empty()) one(nullptr);
            for (const auto& t : trees) one(&t);
            if (table) buffer << tbl.str();
            else if (cfg.tree_spec == "all") emit_json(json{{"results", results}});
            else emit_json(results.size() == 1 ? results[0] : json{{"results", results}});
        } else if (cfg.command == "classify") {
            ClassifyOptions opt;
            opt.workers = cli_detail::resolve_workers(cfg);
            opt.point_cap = cfg.point_cap;
            opt.k_max = cfg.k_max;
            opt.allow_genus5 = cfg.stretch;
            std::vector<ClassificationRecord> records;
            try {
                records = classify(cfg.genus, opt);
            } catch (const GenusOutOfRange&) {
                throw UsageError("genus must be 2..4 (5 with --stretch)");
            }
            if (table) {
                buffer << "genus " << cfg.genus << ": " << records.size() << " pairs\n";
                for (size_t i = 0; i < records.size(); ++i) {
                    const auto& r = records[i];
                    buffer << "pair " << i << ": tree {";
                    for (int e : r.tree.tree_edges()) buffer << e << " ";
                    buffer << "} vertices " << r.q_vertex_count << " reflexive "
                           << (r.reflexivity.reflexive ? "yes" : "no") << " obstruction "
                           << (r.obstruction_applicable ? "yes" : "no") << "\n";
                }
            } else {
                json j = to_json(records);
                j["genus"] = cfg.genus;
                emit_json(j);
            }
        } else if (cfg.command == "verify-paper") {
            VerifyOptions opt;
            opt.stretch = cfg.stretch;
            opt.budget_seconds = cfg.budget_seconds;
            opt.point_cap = cfg.point_cap;
            opt.workers = cli_detail::resolve_workers(cfg);
            VerifyReport report = verify_paper(opt);
            buffer << verify_report_text(report);
            if (!table) emit_json(to_json(report));
            if (report.failed() > 0) status = 1;
        } else {
            throw UsageError("unknown command '" + cfg.command + "'");
        }

        if (cfg.out_stream) {
            *cfg.out_stream << buffer.str();
        } else if (!cfg.output.empty()) {
            std::ofstream f(cfg.output);
            if (!f) throw UsageError("cannot open output file '" + cfg.output + "'");
            f << buffer.str();
        } else {
            std::cout << buffer.str();
        }
        return status;
    } catch (const cli_detail::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace charpoly

#endif  // CHARPOLY_CLI_HPP
