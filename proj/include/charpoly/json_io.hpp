#ifndef CHARPOLY_JSON_IO_HPP
#define CHARPOLY_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "charpoly/analysis.hpp"
#include "charpoly/constructors.hpp"
#include "charpoly/verify.hpp"

namespace charpoly {

using json = nlohmann::json;

// Rationals travel as decimal-free "p/q" strings to stay exact.
inline json to_json(const EdgeVector& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

inline EdgeVector edge_vector_from_json(const json& a) {
    EdgeVector v;
    for (const auto& x : a) v.push_back(rat_parse(x.get<std::string>()));
    return v;
}

inline json to_json(const HPolytope& p) {
    json rows = json::array();
    for (const auto& r : p.rows)
        rows.push_back({{"normal", to_json(r.normal)}, {"rhs", rat_str(r.rhs)}, {"label", r.label}});
    return {{"dim", p.dim}, {"rows", rows}};
}

inline HPolytope h_polytope_from_json(const json& j) {
    HPolytope p;
    p.dim = j.at("dim").get<int>();
    for (const auto& r : j.at("rows"))
        p.rows.push_back({edge_vector_from_json(r.at("normal")),
                          rat_parse(r.at("rhs").get<std::string>()),
                          r.at("label").get<std::string>()});
    return p;
}

inline json to_json(const VPolytope& v) {
    json verts = json::array(), rays = json::array();
    for (const auto& x : v.vertices) verts.push_back(to_json(x));
    for (const auto& x : v.rays) rays.push_back(to_json(x));
    return {{"dim", v.dim}, {"vertices", verts}, {"rays", rays}};
}

// Basis exported column-major with plain integer entries.
inline json to_json(const GraphLattice& l) {
    json basis = json::array();
    for (const auto& col : l.basis_columns()) {
        json c = json::array();
        for (const Int& x : col) c.push_back(static_cast<long long>(x));
        basis.push_back(c);
    }
    return {{"denominator", static_cast<long long>(l.denominator())}, {"basis", basis}};
}

inline json to_json(const std::vector<DivisorRay>& rays) {
    json a = json::array();
    for (const auto& r : rays) {
        const char* kind = r.kind == DivisorRay::Kind::Triangle ? "triangle"
                           : r.kind == DivisorRay::Kind::Boundary ? "boundary"
                                                                  : "family";
        a.push_back({{"kind", kind}, {"label", r.label}, {"generator", to_json(r.generator)}});
    }
    return {{"rays", a}};
}

inline json to_json(const ReflexivityResult& r) {
    json bad = json::array();
    for (const auto& v : r.non_lattice_vertices) bad.push_back(to_json(v));
    return {{"reflexive", r.reflexive},
            {"origin_interior", r.origin_interior},
            {"dual_check", r.dual_check},
            {"non_lattice_vertices", bad},
            {"q_vertex_count", r.q_vertex_count}};
}

inline json to_json(const NormalityResult& r) {
    json fails = json::array();
    for (const auto& [k, v] : r.failures) fails.push_back({{"degree", k}, {"point", to_json(v)}});
    return {{"k_max", r.k_max},
            {"failures", fails},
            {"indeterminate", r.indeterminate},
            {"note", r.note}};
}

inline json to_json(const ClassificationRecord& r) {
    json j = {{"graph", graph_to_text(r.graph, &r.tree)},
              {"tree", r.tree.tree_edges()},
              {"reflexivity", to_json(r.reflexivity)},
              {"q_vertex_count", r.q_vertex_count},
              {"obstruction_applicable", r.obstruction_applicable}};
    j["normality"] = r.normality ? to_json(*r.normality) : json();
    return j;
}

inline json to_json(const std::vector<ClassificationRecord>& records) {
    json a = json::array();
    for (const auto& r : records) a.push_back(to_json(r));
    return {{"records", a}};
}

inline json to_json(const VerifyReport& r) {
    json a = json::array();
    for (const auto& c : r.checks)
        a.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    return {{"checks", a}, {"failed", r.failed()},
            {"passed", static_cast<int>(r.checks.size()) - r.failed()}};
}

}  // namespace charpoly

#endif  // CHARPOLY_JSON_IO_HPP
