#ifndef CHARPOLY_CONSTRUCTORS_HPP
#define CHARPOLY_CONSTRUCTORS_HPP

#include <set>
#include <string>
#include <vector>

#include "charpoly/graph.hpp"
#include "charpoly/lattice.hpp"
#include "charpoly/polytope.hpp"

namespace charpoly {

namespace detail {

inline void require_pair(const Multigraph& g, const SpanningTree& t) {
    if (static_cast<int>(t.tree_edges().size()) != g.vertex_count() - 1 ||
        static_cast<int>(t.tree_edges().size() + t.free_edges().size()) != g.edge_count())
        throw InvalidTree("spanning tree does not belong to this graph");
}

}  // namespace detail

// Triangle inequalities at every vertex, as cone rows (integer normals,
// rhs 0). At a vertex carrying a loop l with third edge e the slot triple is
// (l, l, e), which yields 2a(l) - a(e) >= 0 and a(e) >= 0; the repeated
// a(e) >= 0 row is emitted once, flagged dedup. Identical normals arising at
// different vertices are also emitted once.
inline std::vector<HRow> triangle_rows(const Multigraph& g) {
    if (!is_trivalent(g)) throw NotTrivalent();
    const int n = g.edge_count();
    std::vector<HRow> rows;
    std::set<EdgeVector> seen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto slots = g.incident_slots(v);
        bool loop_here = slots[0] == slots[1] || slots[1] == slots[2];
        for (int k = 0; k < 3; ++k) {
            EdgeVector normal(n, 0);
            for (int i = 0; i < 3; ++i) normal[slots[i]] += (i == k ? -1 : 1);
            if (!seen.insert(normal).second) continue;
            bool negated_loop_slot = loop_here && g.is_loop(slots[k]);
            std::string label = "tri(v" + std::to_string(v) + ",-e" +
                                std::to_string(slots[k]) +
                                (negated_loop_slot ? ",dedup)" : ")");
            rows.push_back({std::move(normal), Rat(0), std::move(label)});
        }
    }
    return rows;
}

// P(G,T): the triangle cone cut by the boundary inequalities a(l) <= 1 on
// free edges. Bounded of dimension 3g-3.
inline HPolytope polytope_P(const Multigraph& g, const SpanningTree& t) {
    detail::require_pair(g, t);
    HPolytope p;
    p.dim = g.edge_count();
    p.rows = triangle_rows(g);
    for (int l : t.free_edges()) {
        EdgeVector normal(p.dim, 0);
        normal[l] = -1;
        p.rows.push_back({std::move(normal), Rat(-1), "bnd(l" + std::to_string(l) + ")"});
    }
    return p;
}

// Q(G,T): triangle rows halved so the normals are primitive in N_Gamma, all
// right-hand sides -1, plus the boundary rows. Q + (2,...,2) = 3P.
inline HPolytope polytope_Q(const Multigraph& g, const SpanningTree& t) {
    detail::require_pair(g, t);
    HPolytope q;
    q.dim = g.edge_count();
    for (auto& r : triangle_rows(g))
        q.rows.push_back({vec_scale(r.normal, Rat(1, 2)), Rat(-1), r.label});
    for (int l : t.free_edges()) {
        EdgeVector normal(q.dim, 0);
        normal[l] = -1;
        q.rows.push_back({std::move(normal), Rat(-1), "bnd(l" + std::to_string(l) + ")"});
    }
    return q;
}

// Delta(T) for a trivalent tree: triangle inequalities at interior vertices
// and w(e) <= 2 on leaf edges. The literal definition leaves the leaf edges
// unbounded below; viewing each leaf as half of a split loop supplies
// w(e) >= 0, which `leaf_nonneg` controls.
inline HPolytope polytope_Delta(const Multigraph& t, bool leaf_nonneg = true) {
    if (t.edge_count() != t.vertex_count() - 1 || t.vertex_count() < 2)
        throw NotTrivalentTree("input is not a tree on at least two vertices");
    const int n = t.edge_count();
    HPolytope d;
    d.dim = n;
    for (int v = 0; v < t.vertex_count(); ++v) {
        int deg = t.degree(v);
        if (deg == 1) continue;
        if (deg != 3) throw NotTrivalentTree();
        auto slots = t.incident_slots(v);
        for (int k = 0; k < 3; ++k) {
            EdgeVector normal(n, 0);
            for (int i = 0; i < 3; ++i) normal[slots[i]] += (i == k ? -1 : 1);
            d.rows.push_back(
                {std::move(normal), Rat(0),
                 "tri(v" + std::to_string(v) + ",-e" + std::to_string(slots[k]) + ")"});
        }
    }
    for (int e = 0; e < n; ++e) {
        auto [a, b] = t.edge(e);
        if (t.degree(a) != 1 && t.degree(b) != 1) continue;
        EdgeVector cap(n, 0);
        cap[e] = -1;
        d.rows.push_back({std::move(cap), Rat(-2), "leafcap(e" + std::to_string(e) + ")"});
        if (leaf_nonneg) {
            EdgeVector pos(n, 0);
            pos[e] = 1;
            d.rows.push_back({std::move(pos), Rat(0), "leafpos(e" + std::to_string(e) + ")"});
        }
    }
    return d;
}

// A ray of the toric data attached to (G,T).
struct DivisorRay {
    enum class Kind { Triangle, Boundary, Family };
    Kind kind;
    EdgeVector generator;
    std::string label;
};

// Rays of the dual of the extended cone {(a,b) : a in P(G), a(l) <= b(l)}:
// one family ray per free edge, living in R^E x R^F with -1 on the edge
// coordinate and +1 on the matching family coordinate, together with the
// rays of P(G)^dual placed in the edge block. The latter are the facet
// normals of the triangle cone, primitivized in N_Gamma.
inline std::vector<DivisorRay> dual_cone_rays(const Multigraph& g, const SpanningTree& t) {
    detail::require_pair(g, t);
    const int ne = g.edge_count();
    const auto& free = t.free_edges();
    const int nf = static_cast<int>(free.size());
    std::vector<DivisorRay> out;
    for (int i = 0; i < nf; ++i) {
        EdgeVector gen(ne + nf, 0);
        gen[free[i]] = -1;
        gen[ne + i] = 1;
        out.push_back({DivisorRay::Kind::Family, std::move(gen),
                       "fam(l" + std::to_string(free[i]) + ")"});
    }
    auto rows = triangle_rows(g);
    std::vector<EdgeVector> normals;
    for (const auto& r : rows) normals.push_back(r.normal);
    auto rays = cone_extreme_rays(normals, ne);
    GraphLattice n_gamma = n_lattice(g);
    for (const auto& r : rows) {
        std::vector<EdgeVector> tight;
        for (const auto& ray : rays)
            if (dot(r.normal, ray) == 0) tight.push_back(ray);
        RatMat m(tight.begin(), tight.end());
        if (mat_rank(std::move(m)) != ne - 1) continue;  // redundant row
        EdgeVector prim = primitive_scale(n_gamma, r.normal);
        EdgeVector gen(ne + nf, 0);
        for (int i = 0; i < ne; ++i) gen[i] = prim[i];
        out.push_back({DivisorRay::Kind::Triangle, std::move(gen), r.label});
    }
    return out;
}

// Ray generators of the anti-canonical fan data: (b_e + b_f - b_h)/2 and its
// sign rotations at every vertex, -b_l on every free edge. Each is checked
// primitive in N_Gamma; with right-hand side -1 they cut out Q(G,T).
inline std::vector<DivisorRay> anticanonical_rays(const Multigraph& g, const SpanningTree& t) {
    detail::require_pair(g, t);
    if (!is_trivalent(g)) throw NotTrivalent();
    const int n = g.edge_count();
    GraphLattice n_gamma = n_lattice(g);
    std::vector<DivisorRay> out;
    std::set<EdgeVector> seen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto slots = g.incident_slots(v);
        for (int k = 0; k < 3; ++k) {
            EdgeVector gen(n, 0);
            for (int i = 0; i < 3; ++i) gen[slots[i]] += Rat(i == k ? -1 : 1, 2);
            if (!seen.insert(gen).second) continue;
            if (!is_primitive(n_gamma, gen))
                throw Error("anti-canonical triangle ray is not primitive in N");
            out.push_back({DivisorRay::Kind::Triangle, std::move(gen),
                           "tri(v" + std::to_string(v) + ",-e" + std::to_string(slots[k]) + ")"});
        }
    }
    for (int l : t.free_edges()) {
        EdgeVector gen(n, 0);
        gen[l] = -1;
        if (!is_primitive(n_gamma, gen))
            throw Error("anti-canonical boundary ray is not primitive in N");
        out.push_back({DivisorRay::Kind::Boundary, std::move(gen), "bnd(l" + std::to_string(l) + ")"});
    }
    return out;
}

// The polytope {x : <ray, x> >= -1 for all rays}; equals Q(G,T).
inline HPolytope rays_to_h(const std::vector<DivisorRay>& rays, int dim) {
    HPolytope p;
    p.dim = dim;
    for (const auto& r : rays) p.rows.push_back({r.generator, Rat(-1), r.label});
    return p;
}

}  // namespace charpoly

#endif  // CHARPOLY_CONSTRUCTORS_HPP
