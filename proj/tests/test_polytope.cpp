#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "charpoly/charpoly.hpp"
#include "oracles.hpp"

using namespace charpoly;

namespace {

HPolytope box(int n, const Rat& lo, const Rat& hi) {
    HPolytope p;
    p.dim = n;
    for (int i = 0; i < n; ++i) {
        EdgeVector up(n, 0), down(n, 0);
        up[i] = 1;
        down[i] = -1;
        p.rows.push_back({up, lo, "lo" + std::to_string(i)});
        p.rows.push_back({down, -hi, "hi" + std::to_string(i)});
    }
    return p;
}

std::set<EdgeVector> vset(const VPolytope& v) {
    return std::set<EdgeVector>(v.vertices.begin(), v.vertices.end());
}

HPolytope shuffled(const HPolytope& p, std::mt19937& rng) {
    HPolytope q = p;
    std::shuffle(q.rows.begin(), q.rows.end(), rng);
    return q;
}

}  // namespace

TEST_CASE("vertex enumeration on boxes") {
    VPolytope cube = vertices(box(3, 0, 1));
    CHECK(cube.vertices.size() == 8);
    CHECK(cube.rays.empty());
    CHECK(vset(cube) == oracles::brute_vertices(box(3, 0, 1)));
    // canonical order is lexicographic
    for (size_t i = 1; i < cube.vertices.size(); ++i)
        CHECK(cube.vertices[i - 1] < cube.vertices[i]);
}

TEST_CASE("vertex enumeration matches the brute-force oracle") {
    Multigraph dumbbell = dumbbell_graph(), theta = theta_graph(), k4 = k4_graph();
    auto dt = SpanningTree::of(dumbbell, {2});
    auto tt = SpanningTree::of(theta, {2});
    auto t2 = SpanningTree::of(k4, k4_path_tree());
    for (const HPolytope& p : {polytope_Q(dumbbell, dt), polytope_Q(theta, tt),
                               dilate(polytope_P(dumbbell, dt), 3)})
        CHECK(vset(vertices(p)) == oracles::brute_vertices(p));
    // dimension 6 with 16 vertices
    CHECK(vset(vertices(polytope_Q(k4, t2))) == oracles::brute_vertices(polytope_Q(k4, t2)));
}

TEST_CASE("vertex enumeration on seeded random polytopes") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-3, 3), rhs(1, 4);
    int nonempty = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + trial % 3;
        HPolytope p = box(n, -2, 2);  // keep it bounded
        for (int extra = 0; extra < n + 2; ++extra) {
            EdgeVector normal(n);
            bool zero = true;
            for (auto& x : normal) {
                x = coef(rng);
                if (x != 0) zero = false;
            }
            if (zero) continue;
            p.rows.push_back({normal, Rat(-rhs(rng)), "r" + std::to_string(extra)});
        }
        std::set<EdgeVector> want = oracles::brute_vertices(p);
        if (want.empty()) {
            CHECK_THROWS_AS(vertices(p), Infeasible);
            continue;
        }
        ++nonempty;
        CHECK(vset(vertices(p)) == want);
    }
    CHECK(nonempty > 10);
}

TEST_CASE("vertex enumeration under duplicate, parallel, and tight rows") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coef(-2, 2), rhs(0, 3), flavor(0, 3);
    int nonempty = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + trial % 4;  // up to dimension 6
        HPolytope p = box(n, -1, 2);
        int id = 0;
        for (int extra = 0; extra < n; ++extra) {
            EdgeVector normal(n);
            bool zero = true;
            for (auto& x : normal) {
                x = coef(rng);
                if (x != 0) zero = false;
            }
            if (zero) continue;
            // rhs 0 rows pass through lattice-ish corners and force ties
            Rat r = Rat(-rhs(rng));
            p.rows.push_back({normal, r, "r" + std::to_string(id++)});
            switch (flavor(rng)) {
                case 0:  // exact duplicate
                    p.rows.push_back({normal, r, "r" + std::to_string(id++)});
                    break;
                case 1:  // scaled copy of the same halfspace
                    p.rows.push_back(
                        {vec_scale(normal, 3), r * 3, "r" + std::to_string(id++)});
                    break;
                case 2:  // weaker parallel row, strictly redundant
                    p.rows.push_back({normal, r - 2, "r" + std::to_string(id++)});
                    break;
                default:
                    break;
            }
        }
        std::set<EdgeVector> want = oracles::brute_vertices(p);
        if (want.empty()) {
            CHECK_THROWS_AS(vertices(p), Infeasible);
            continue;
        }
        ++nonempty;
        CHECK(vset(vertices(p)) == want);
    }
    CHECK(nonempty > 15);
}

TEST_CASE("lattice point enumeration matches the box-scan oracle") {
    Multigraph k4 = k4_graph();
    auto t1 = SpanningTree::of(k4, k4_star_tree());
    GraphLattice m = m_lattice(k4);
    HPolytope p = polytope_P(k4, t1);
    auto got = lattice_points(p, m);
    // P(K4) sits inside [0,2]^6: free edges at most 1, spokes at most 2
    CHECK(std::set<EdgeVector>(got.begin(), got.end()) ==
          oracles::brute_lattice_points(p, m, std::vector<int>(6, 0),
                                        std::vector<int>(6, 2)));

    Multigraph s = star3_graph();
    auto st = SpanningTree::of(s, star3_tree());
    HPolytope p3 = dilate(polytope_P(s, st), 3);
    GraphLattice ms = m_lattice(s);
    auto got3 = lattice_points(p3, ms);
    CHECK(std::set<EdgeVector>(got3.begin(), got3.end()) ==
          oracles::brute_lattice_points(p3, ms, std::vector<int>(6, 0),
                                        {6, 6, 6, 3, 3, 3}));
}

TEST_CASE("every reported vertex is feasible and tight on a full-rank row set") {
    Multigraph k4 = k4_graph();
    HPolytope q = polytope_Q(k4, SpanningTree::of(k4, k4_path_tree()));
    VPolytope v = vertices(q);
    for (const auto& x : v.vertices) {
        CHECK(satisfies(q, x));
        RatMat tight;
        for (const auto& r : q.rows)
            if (dot(r.normal, x) == r.rhs) tight.push_back(r.normal);
        CHECK(mat_rank(std::move(tight)) == q.dim);
    }
}

TEST_CASE("double description output is row-order independent") {
    std::mt19937 rng(5);
    Multigraph k4 = k4_graph();
    HPolytope q = polytope_Q(k4, SpanningTree::of(k4, k4_star_tree()));
    auto want = vset(vertices(q));
    for (int trial = 0; trial < 6; ++trial)
        CHECK(vset(vertices(shuffled(q, rng))) == want);
}

TEST_CASE("infeasible and unbounded inputs") {
    HPolytope p;
    p.dim = 2;
    p.rows.push_back({{Rat(1), Rat(0)}, Rat(1), "a"});
    p.rows.push_back({{Rat(-1), Rat(0)}, Rat(0), "b"});
    p.rows.push_back({{Rat(0), Rat(1)}, Rat(0), "c"});
    p.rows.push_back({{Rat(0), Rat(-1)}, Rat(0), "d"});
    CHECK_THROWS_AS(vertices(p), Infeasible);

    HPolytope orthant;
    orthant.dim = 2;
    orthant.rows.push_back({{Rat(1), Rat(0)}, Rat(0), "x"});
    orthant.rows.push_back({{Rat(0), Rat(1)}, Rat(0), "y"});
    VPolytope v = vertices(orthant);
    CHECK(v.vertices.size() == 1);
    CHECK(v.rays.size() == 2);
    CHECK_THROWS_AS(lattice_points(orthant, GraphLattice::standard(2)), Unbounded);
}

TEST_CASE("dilate and translate") {
    Multigraph d = dumbbell_graph();
    auto t = SpanningTree::of(d, {2});
    HPolytope p = polytope_P(d, t);

    auto v1 = vertices(p);
    auto v3 = vertices(dilate(p, 3));
    std::set<EdgeVector> scaled;
    for (const auto& x : v1.vertices) scaled.insert(vec_scale(x, 3));
    CHECK(vset(v3) == scaled);
    CHECK(vset(vertices(dilate(p, 1))) == vset(v1));
    CHECK_THROWS_AS(dilate(p, 0), NonPositiveFactor);
    CHECK_THROWS_AS(dilate(p, Rat(-2)), NonPositiveFactor);

    EdgeVector shift{Rat(1), Rat(-2), Rat(1, 2)};
    HPolytope moved = translate(p, shift);
    std::set<EdgeVector> want;
    for (const auto& x : v1.vertices) want.insert(vec_add(x, shift));
    CHECK(vset(vertices(moved)) == want);
    CHECK(vset(vertices(translate(moved, vec_scale(shift, -1)))) == vset(v1));
    CHECK(vset(vertices(translate(p, EdgeVector(3, 0)))) == vset(v1));
    CHECK_THROWS_AS(translate(p, EdgeVector(2, 0)), DimensionMismatch);
}

TEST_CASE("polar duality") {
    // [-1,1]^3 dualizes to the standard octahedron
    VPolytope oct = polar_dual(box(3, -1, 1));
    CHECK(oct.vertices.size() == 6);
    for (const auto& v : oct.vertices) {
        Rat norm = 0;
        for (const auto& x : v) norm += x < 0 ? -x : x;
        CHECK(norm == 1);
    }

    // dual of Q(dumbbell) is the five primitive inequality normals
    Multigraph d = dumbbell_graph();
    auto t = SpanningTree::of(d, {2});
    HPolytope q = polytope_Q(d, t);
    VPolytope qd = polar_dual(q);
    std::set<EdgeVector> want;
    for (const auto& r : q.rows) want.insert(r.normal);  // rhs is already -1
    CHECK(vset(qd) == want);

    // involution: the dual of the dual gives the original vertex set
    Multigraph theta = theta_graph();
    HPolytope qt = polytope_Q(theta, SpanningTree::of(theta, {2}));
    VPolytope back = vertices(polar_h(polar_dual(qt)));
    CHECK(vset(back) == vset(vertices(qt)));

    CHECK_THROWS_AS(polar_dual(box(3, 0, 1)), OriginNotInterior);
}

TEST_CASE("lattice points") {
    CHECK(lattice_points(box(2, 0, 1), GraphLattice::standard(2)).size() == 4);

    // P(dumbbell) has exactly five lattice points in M
    Multigraph d = dumbbell_graph();
    auto t = SpanningTree::of(d, {2});
    HPolytope p = polytope_P(d, t);
    GraphLattice m = m_lattice(d);
    auto pts = lattice_points(p, m);
    std::set<EdgeVector> got(pts.begin(), pts.end());
    CHECK(got == oracles::brute_lattice_points(p, m, {0, 0, 0}, {1, 1, 2}));
    std::set<EdgeVector> want{{Rat(0), Rat(0), Rat(0)},
                              {Rat(1), Rat(0), Rat(0)},
                              {Rat(0), Rat(1), Rat(0)},
                              {Rat(1), Rat(1), Rat(0)},
                              {Rat(1), Rat(1), Rat(2)}};
    CHECK(got == want);
    // deterministic lexicographic order
    for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);

    // a lattice with denominator 2: half-integer points of the unit square
    GraphLattice half(2, 2, {{1, 0}, {0, 1}});
    CHECK(lattice_points(box(2, 0, 1), half).size() == 9);

    CHECK_THROWS_AS(lattice_points(box(2, 0, 10), GraphLattice::standard(2), 5),
                    ResourceLimit);
}

TEST_CASE("faces") {
    HPolytope cube = box(3, 0, 1);
    HPolytope facet = face(cube, {"lo0"});
    VPolytope v = vertices(facet);
    CHECK(v.vertices.size() == 4);
    for (const auto& x : v.vertices) CHECK(x[0] == 0);
    CHECK(dim(facet) == 2);
    CHECK_THROWS_AS(face(cube, {"nope"}), UnknownLabel);
}

TEST_CASE("faces of seeded random polytopes match the oracle") {
    // equality pairs exercise the degenerate side of the double description
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-2, 2), rhs(1, 3);
    int nonempty = 0;
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + trial % 2;
        HPolytope p = box(n, -2, 2);
        for (int extra = 0; extra < n; ++extra) {
            EdgeVector normal(n);
            bool zero = true;
            for (auto& x : normal) {
                x = coef(rng);
                if (x != 0) zero = false;
            }
            if (zero) continue;
            p.rows.push_back({normal, Rat(-rhs(rng)), "r" + std::to_string(extra)});
        }
        HPolytope f = face(p, {"lo0", p.rows.back().label});
        auto want = oracles::brute_vertices(f);
        if (want.empty()) {
            CHECK_THROWS_AS(vertices(f), Infeasible);
            continue;
        }
        ++nonempty;
        CHECK(vset(vertices(f)) == want);
    }
    CHECK(nonempty > 5);
}

TEST_CASE("dimension") {
    Multigraph d = dumbbell_graph(), k4 = k4_graph();
    CHECK(dim(polytope_P(d, SpanningTree::of(d, {2}))) == 3);
    CHECK(dim(polytope_P(k4, SpanningTree::of(k4, k4_star_tree()))) == 6);
    HPolytope point = box(3, 1, 1);
    CHECK(dim(point) == 0);
}

TEST_CASE("polytope JSON round trip") {
    Multigraph d = dumbbell_graph();
    HPolytope q = polytope_Q(d, SpanningTree::of(d, {2}));
    HPolytope back = h_polytope_from_json(to_json(q));
    CHECK(back.dim == q.dim);
    REQUIRE(back.rows.size() == q.rows.size());
    for (size_t i = 0; i < q.rows.size(); ++i) {
        CHECK(back.rows[i].normal == q.rows[i].normal);
        CHECK(back.rows[i].rhs == q.rows[i].rhs);
        CHECK(back.rows[i].label == q.rows[i].label);
    }
}
