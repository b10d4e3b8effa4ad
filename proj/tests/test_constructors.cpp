#include <catch2/catch_amalgamated.hpp>

#include "charpoly/charpoly.hpp"
#include "oracles.hpp"

using namespace charpoly;

namespace {
std::set<EdgeVector> vset(const HPolytope& p) {
    auto v = vertices(p);
    return std::set<EdgeVector>(v.vertices.begin(), v.vertices.end());
}
}  // namespace

TEST_CASE("triangle rows") {
    // dumbbell: one row per loop vertex pair plus the shared a(e) >= 0 row
    auto rows = triangle_rows(dumbbell_graph());
    REQUIRE(rows.size() == 3);
    std::set<EdgeVector> normals;
    for (const auto& r : rows) normals.insert(r.normal);
    CHECK(normals == std::set<EdgeVector>{{Rat(0), Rat(0), Rat(1)},
                                          {Rat(2), Rat(0), Rat(-1)},
                                          {Rat(0), Rat(2), Rat(-1)}});
    bool dedup_flag = false;
    for (const auto& r : rows) dedup_flag |= r.label.find("dedup") != std::string::npos;
    CHECK(dedup_flag);

    CHECK(triangle_rows(theta_graph()).size() == 3);
    CHECK(triangle_rows(k4_graph()).size() == 12);
    // H loop-tree: two interior vertices emit 3 rows, four loop vertices 2
    auto [h, ht] = loop_tree(h_tree());
    CHECK(triangle_rows(h).size() == 2 * 3 + 4 * 2);

    CHECK_THROWS_AS(triangle_rows(Multigraph(2, {{0, 1}})), NotTrivalent);
}

TEST_CASE("P polytope") {
    Multigraph d = dumbbell_graph();
    auto t = SpanningTree::of(d, {2});
    HPolytope p = polytope_P(d, t);
    CHECK(p.rows.size() == 5);
    CHECK(dim(p) == 3);
    CHECK(strictly_satisfies(p, EdgeVector(3, Rat(2, 3))));
    CHECK(vertices(p).rays.empty());  // bounded

    Multigraph k4 = k4_graph();
    CHECK(dim(polytope_P(k4, SpanningTree::of(k4, k4_star_tree()))) == 6);

    // a tree of the wrong graph is rejected
    CHECK_THROWS_AS(polytope_P(d, SpanningTree::of(k4, k4_star_tree())), InvalidTree);
}

TEST_CASE("Q polytope goldens") {
    Multigraph d = dumbbell_graph();
    auto dt = SpanningTree::of(d, {2});
    HPolytope q = polytope_Q(d, dt);
    // all right-hand sides are -1 and the origin is strictly inside
    for (const auto& r : q.rows) CHECK(r.rhs == -1);
    CHECK(strictly_satisfies(q, EdgeVector(3, 0)));
    CHECK(vset(q) == reference::dumbbell_q_vertices());

    Multigraph theta = theta_graph();
    CHECK(vset(polytope_Q(theta, SpanningTree::of(theta, {2}))) ==
          reference::theta_q_vertices());

    Multigraph k4 = k4_graph();
    CHECK(vset(polytope_Q(k4, SpanningTree::of(k4, k4_star_tree()))) ==
          reference::k4_star_q_vertices());
    CHECK(vset(polytope_Q(k4, SpanningTree::of(k4, k4_path_tree()))) ==
          reference::k4_path_q_vertices());
}

TEST_CASE("K4 vertex parities, checked against the incidence sums directly") {
    // independent of GraphLattice: sum the incident values at each vertex
    Multigraph k4 = k4_graph();
    auto parity_ok = [&](const EdgeVector& w) {
        for (int v = 0; v < k4.vertex_count(); ++v) {
            Rat sum = 0;
            for (int s : k4.incident_slots(v)) sum += w[s];
            if (!is_integer(sum / 2)) return false;
        }
        return true;
    };
    for (const auto& w : reference::k4_star_q_vertices()) CHECK(parity_ok(w));
    int odd = 0;
    for (const auto& w : reference::k4_path_q_vertices())
        if (!parity_ok(w)) ++odd;
    CHECK(odd == 1);
    CHECK_FALSE(parity_ok(reference::k4_non_lattice_vertex()));
}

TEST_CASE("Q translated by two is thrice P") {
    for (const auto& [g, tree] :
         {std::pair(dumbbell_graph(), std::vector<int>{2}),
          std::pair(theta_graph(), std::vector<int>{2}),
          std::pair(k4_graph(), k4_star_tree()),
          std::pair(rattle_graph(), rattle_star_tree())}) {
        auto t = SpanningTree::of(g, tree);
        auto lhs = vset(translate(polytope_Q(g, t), EdgeVector(g.edge_count(), 2)));
        auto rhs = vset(dilate(polytope_P(g, t), 3));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Delta polytope") {
    // single edge: the interval [0, 2] with even lattice points 0 and 2
    Multigraph edge(2, {{0, 1}});
    HPolytope d1 = polytope_Delta(edge);
    auto v = vertices(d1);
    CHECK(vset(d1) == std::set<EdgeVector>{{Rat(0)}, {Rat(2)}});
    auto pts = lattice_points(d1, GraphLattice::even(1));
    CHECK(pts == std::vector<EdgeVector>{{Rat(0)}, {Rat(2)}});

    // without the nonnegativity reading the interval loses its floor
    HPolytope open_ended = polytope_Delta(edge, false);
    CHECK_FALSE(vertices(open_ended).rays.empty());

    // claw: brute-force over {0,2}^3 against the triangle filter
    Multigraph claw(4, {{0, 1}, {0, 2}, {0, 3}});
    HPolytope d3 = polytope_Delta(claw);
    auto got = lattice_points(d3, GraphLattice::even(3));
    std::set<EdgeVector> expected;
    for (int a : {0, 2})
        for (int b : {0, 2})
            for (int c : {0, 2})
                if (a <= b + c && b <= a + c && c <= a + b)
                    expected.insert({Rat(a), Rat(b), Rat(c)});
    CHECK(std::set<EdgeVector>(got.begin(), got.end()) == expected);
    CHECK(expected.size() == 5);

    // the H tree: Delta is normal at low degrees
    auto res = check_idp_polytope(polytope_Delta(h_tree()), GraphLattice::even(5), 3);
    CHECK(res.failures.empty());
    CHECK_FALSE(res.indeterminate);

    CHECK_THROWS_AS(polytope_Delta(dumbbell_graph()), NotTrivalentTree);
    CHECK_THROWS_AS(polytope_Delta(Multigraph(3, {{0, 1}, {1, 2}})), NotTrivalentTree);
}

TEST_CASE("anti-canonical rays") {
    Multigraph d = dumbbell_graph();
    auto dt = SpanningTree::of(d, {2});
    auto rays = anticanonical_rays(d, dt);
    REQUIRE(rays.size() == 5);
    GraphLattice n = n_lattice(d);
    for (const auto& r : rays) CHECK(is_primitive(n, r.generator));
    CHECK(vset(rays_to_h(rays, 3)) == reference::dumbbell_q_vertices());

    Multigraph k4 = k4_graph();
    auto k4r = anticanonical_rays(k4, SpanningTree::of(k4, k4_star_tree()));
    CHECK(k4r.size() == 15);
    int triangle = 0, boundary = 0;
    for (const auto& r : k4r)
        (r.kind == DivisorRay::Kind::Triangle ? triangle : boundary) += 1;
    CHECK(triangle == 12);
    CHECK(boundary == 3);
}

TEST_CASE("extended dual cone rays") {
    Multigraph d = dumbbell_graph();
    auto dt = SpanningTree::of(d, {2});
    auto rays = dual_cone_rays(d, dt);
    size_t family = 0, triangle = 0;
    for (const auto& r : rays) {
        CHECK(r.generator.size() == 5);  // |E| + |F|
        if (r.kind == DivisorRay::Kind::Family) {
            ++family;
            // -1 on the free edge, +1 on the matching family coordinate
            Rat sum = 0;
            for (const auto& x : r.generator) sum += x < 0 ? -x : x;
            CHECK(sum == 2);
        } else {
            ++triangle;
            CHECK(r.generator[3] == 0);
            CHECK(r.generator[4] == 0);
        }
    }
    CHECK(family == 2);
    CHECK(triangle == 3);

    Multigraph theta = theta_graph();
    auto theta_rays = dual_cone_rays(theta, SpanningTree::of(theta, {2}));
    CHECK(theta_rays.size() == 5);  // one family ray per free edge + 3 triangle

    // K4: all twelve triangle rows cut facets of the cone
    Multigraph k4 = k4_graph();
    auto k4_rays = dual_cone_rays(k4, SpanningTree::of(k4, k4_star_tree()));
    size_t k4_family = 0, k4_triangle = 0;
    for (const auto& r : k4_rays)
        (r.kind == DivisorRay::Kind::Family ? k4_family : k4_triangle) += 1;
    CHECK(k4_family == 3);
    CHECK(k4_triangle == 12);
    // the edge-block parts are the primitive halved normals
    GraphLattice n = n_lattice(k4);
    for (const auto& r : k4_rays) {
        if (r.kind != DivisorRay::Kind::Triangle) continue;
        EdgeVector edge_part(r.generator.begin(), r.generator.begin() + 6);
        CHECK(is_primitive(n, edge_part));
    }
}
