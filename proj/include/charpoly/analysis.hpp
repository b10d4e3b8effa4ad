#ifndef CHARPOLY_ANALYSIS_HPP
#define CHARPOLY_ANALYSIS_HPP

#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "charpoly/builtins.hpp"
#include "charpoly/constructors.hpp"
#include "charpoly/graph.hpp"
#include "charpoly/lattice.hpp"
#include "charpoly/polytope.hpp"

namespace charpoly {

// Reflexivity of Q(G,T) as three independently recorded conditions: the
// origin interior, every vertex in M_Gamma, every facet normal (scaled to
// rhs -1) in N_Gamma. The verdict is their conjunction; nothing is assumed
// from the primitivity remark.
struct ReflexivityResult {
    bool reflexive = false;
    std::vector<EdgeVector> non_lattice_vertices;
    bool dual_check = false;
    bool origin_interior = false;
    int q_vertex_count = 0;
};

inline ReflexivityResult check_reflexive(const Multigraph& g, const SpanningTree& t,
                                         const DDLimits& lim = {}) {
    HPolytope q = polytope_Q(g, t);
    VPolytope v = vertices(q, lim);
    GraphLattice m = m_lattice(g);
    GraphLattice n = n_lattice(g);

    ReflexivityResult res;
    res.q_vertex_count = static_cast<int>(v.vertices.size());
    res.origin_interior = strictly_satisfies(q, EdgeVector(q.dim, 0));
    for (const auto& x : v.vertices)
        if (!m.contains(x)) res.non_lattice_vertices.push_back(x);
    res.dual_check = true;
    for (int i : facet_row_indices(q, v)) {
        EdgeVector y = vec_scale(q.rows[i].normal, Rat(-1) / q.rows[i].rhs);
        if (!n.contains(y)) res.dual_check = false;
    }
    res.reflexive =
        res.origin_interior && res.dual_check && res.non_lattice_vertices.empty();
    return res;
}

// Integer decomposition check up to degree k_max: every lattice point of kP
// must be a sum of k degree-one points. S_k is built as the k-fold sumset of
// the degree-one points; what is in kP but not in S_k is a failure.
struct NormalityResult {
    int k_max = 0;
    std::vector<std::pair<int, EdgeVector>> failures;
    bool indeterminate = false;
    std::string note;
};

inline NormalityResult check_idp_polytope(const HPolytope& p, const GraphLattice& l,
                                          int k_max, size_t point_cap = 10000000) {
    if (k_max < 2) throw Error("k_max must be at least 2");
    NormalityResult res;
    res.k_max = k_max;
    try {
        auto deg1 = lattice_points(p, l, point_cap);
        std::set<EdgeVector> prev(deg1.begin(), deg1.end());
        for (int k = 2; k <= k_max; ++k) {
            auto target = lattice_points(dilate(p, k), l, point_cap);
            std::set<EdgeVector> cur;
            for (const auto& w : target) {
                bool ok = false;
                for (const auto& u : deg1) {
                    if (prev.count(vec_sub(w, u))) {
                        ok = true;
                        break;
                    }
                }
                if (ok) cur.insert(w);
                else res.failures.emplace_back(k, w);
            }
            prev = std::move(cur);
        }
    } catch (const ResourceLimit& e) {
        res.indeterminate = true;
        res.note = e.what();
        res.failures.clear();
    }
    return res;
}

inline NormalityResult check_idp(const Multigraph& g, const SpanningTree& t, int k_max = 3,
                                 size_t point_cap = 10000000) {
    return check_idp_polytope(polytope_P(g, t), m_lattice(g), k_max, point_cap);
}

// Split w in kP into k degree-one lattice points. Depth-first with
// memoized dead ends; candidates are tried tree-coordinates-first, the
// greedy order suggested by the constructive normality proof. P lies in
// the nonnegative orthant, so summands never exceed the remainder
// coordinatewise and the search can prune on that.
inline std::vector<EdgeVector> decompose(const EdgeVector& w, int k, const Multigraph& g,
                                         const SpanningTree& t,
                                         size_t point_cap = 10000000) {
    if (k < 1) throw Error("k must be positive");
    HPolytope p = polytope_P(g, t);
    GraphLattice m = m_lattice(g);
    if (!m.contains(w) || !satisfies(dilate(p, k), w))
        throw Error("point is not a lattice point of the k-th dilate");
    if (k == 1) return {w};

    auto deg1 = lattice_points(p, m, point_cap);
    std::vector<size_t> order(deg1.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto key = [&](const EdgeVector& u) {
        EdgeVector v;
        for (int e : t.tree_edges()) v.push_back(u[e]);
        for (int e : t.free_edges()) v.push_back(u[e]);
        return v;
    };
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return key(deg1[a]) > key(deg1[b]); });

    std::set<EdgeVector> deg1_set(deg1.begin(), deg1.end());
    std::set<std::pair<int, EdgeVector>> dead;
    std::vector<EdgeVector> picked;

    auto rec = [&](auto&& self, const EdgeVector& rest, int left) -> bool {
        if (left == 1) {
            if (!deg1_set.count(rest)) return false;
            picked.push_back(rest);
            return true;
        }
        if (dead.count({left, rest})) return false;
        for (size_t idx : order) {
            const EdgeVector& u = deg1[idx];
            bool fits = true;
            EdgeVector next(rest.size());
            for (size_t i = 0; i < rest.size(); ++i) {
                next[i] = rest[i] - u[i];
                if (next[i] < 0) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            picked.push_back(u);
            if (self(self, next, left - 1)) return true;
            picked.pop_back();
        }
        dead.insert({left, rest});
        return false;
    };
    if (!rec(rec, w, k)) throw NoDecomposition();
    return picked;
}

// Hypotheses of the non-reflexivity obstruction: between 2 and g-1 loops and
// a non-loop free edge f meeting no other free edge at either endpoint.
inline bool obstruction_hypotheses(const Multigraph& g, const SpanningTree& t, int f) {
    int k = g.loop_count();
    if (k < 2 || k >= betti(g)) return false;
    const auto& free = t.free_edges();
    if (std::find(free.begin(), free.end(), f) == free.end() || g.is_loop(f)) return false;
    auto [a, b] = g.edge(f);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == f || t.in_tree(e)) continue;
        auto [x, y] = g.edge(e);
        if (x == a || y == a || x == b || y == b) return false;
    }
    return true;
}

inline bool obstruction_applicable(const Multigraph& g, const SpanningTree& t) {
    for (int f : t.free_edges())
        if (obstruction_hypotheses(g, t, f)) return true;
    return false;
}

// The non-reflexivity witness: 3 along the loop-to-loop tree path through f,
// 3/2 on the two loops, 0 elsewhere. Verified to be a vertex of 3P (tight on
// a full-rank row set) lying outside M_Gamma before it is returned.
inline EdgeVector obstruction_witness(const Multigraph& g, const SpanningTree& t, int f) {
    if (!obstruction_hypotheses(g, t, f)) throw ObstructionNotApplicable();

    // all simple loop-vertex-to-loop-vertex paths through f inside T + {f}
    std::vector<int> loop_vertices;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) loop_vertices.push_back(g.edge(e).first);
    std::sort(loop_vertices.begin(), loop_vertices.end());
    loop_vertices.erase(std::unique(loop_vertices.begin(), loop_vertices.end()),
                        loop_vertices.end());

    std::vector<int> allowed;  // tree edges and f
    for (int e = 0; e < g.edge_count(); ++e)
        if (e == f || t.in_tree(e)) allowed.push_back(e);

    std::vector<std::vector<int>> candidates;
    for (size_t i = 0; i < loop_vertices.size(); ++i)
        for (size_t j = 0; j < loop_vertices.size(); ++j) {
            if (i == j) continue;
            int src = loop_vertices[i], dst = loop_vertices[j];
            std::vector<int> path;
            std::vector<char> visited(g.vertex_count(), 0);
            visited[src] = 1;
            auto dfs = [&](auto&& self, int at) -> void {
                if (at == dst) {
                    if (std::find(path.begin(), path.end(), f) != path.end()) {
                        std::vector<int> norm = path;
                        std::vector<int> rev(norm.rbegin(), norm.rend());
                        candidates.push_back(std::min(norm, rev));
                    }
                    return;
                }
                for (int e : allowed) {
                    auto [x, y] = g.edge(e);
                    int to = -1;
                    if (x == at) to = y;
                    else if (y == at) to = x;
                    if (to < 0 || visited[to]) continue;
                    visited[to] = 1;
                    path.push_back(e);
                    self(self, to);
                    path.pop_back();
                    visited[to] = 0;
                }
            };
            dfs(dfs, src);
        }
    if (candidates.empty())
        throw ObstructionNotApplicable("no loop-to-loop path through the free edge");
    std::sort(candidates.begin(), candidates.end());
    const std::vector<int>& path = candidates.front();

    // the two loops at the ends of the path
    std::set<int> path_vertices;
    for (int e : path) {
        path_vertices.insert(g.edge(e).first);
        path_vertices.insert(g.edge(e).second);
    }
    EdgeVector v(g.edge_count(), 0);
    for (int e : path) v[e] = 3;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e) && path_vertices.count(g.edge(e).first)) v[e] = Rat(3, 2);

    HPolytope p3 = dilate(polytope_P(g, t), 3);
    if (!satisfies(p3, v)) throw Error("obstruction witness fell outside 3P");
    std::vector<EdgeVector> tight;
    for (const auto& r : p3.rows)
        if (dot(r.normal, v) == r.rhs) tight.push_back(r.normal);
    if (mat_rank(RatMat(tight.begin(), tight.end())) != g.edge_count())
        throw Error("obstruction witness is not a vertex of 3P");
    if (m_lattice(g).contains(v)) throw Error("obstruction witness unexpectedly in M");
    return v;
}

// --- classification ---------------------------------------------------------

struct ClassificationRecord {
    Multigraph graph;  // canonical labeling
    SpanningTree tree;
    ReflexivityResult reflexivity;
    std::optional<NormalityResult> normality;
    int q_vertex_count = 0;
    bool obstruction_applicable = false;
};

struct ClassifyOptions {
    bool with_normality = false;
    int k_max = 3;
    unsigned workers = 1;
    size_t point_cap = 10000000;
    bool allow_genus5 = false;
};

// Every (graph, spanning tree) pair of the given genus, graphs up to
// isomorphism and trees up to graph automorphism, with verdicts. Workers
// share the pair list by atomic index; records land in preallocated slots,
// so the output does not depend on the worker count.
inline std::vector<ClassificationRecord> classify(int genus, const ClassifyOptions& opt = {}) {
    if (genus < 2 || genus > (opt.allow_genus5 ? 5 : 4)) throw GenusOutOfRange();
    struct Pair {
        Multigraph graph;
        SpanningTree tree;
        std::vector<std::array<int, 3>> key;
    };
    std::vector<Pair> pairs;
    for (const auto& g : enumerate_trivalent(genus))
        for (const auto& t : spanning_tree_classes(g)) {
            auto key = canonical_pair_edges(g, t);
            // rebuild on the canonical labeling so reports are stable
            std::vector<std::pair<int, int>> edges;
            std::vector<int> tree_ids;
            for (size_t e = 0; e < key.size(); ++e) {
                edges.emplace_back(key[e][0], key[e][1]);
                if (key[e][2] == 1) tree_ids.push_back(static_cast<int>(e));
            }
            Multigraph cg(g.vertex_count(), std::move(edges));
            SpanningTree ct = SpanningTree::of(cg, tree_ids);
            pairs.push_back({std::move(cg), std::move(ct), std::move(key)});
        }
    std::sort(pairs.begin(), pairs.end(),
              [](const Pair& a, const Pair& b) { return a.key < b.key; });

    std::vector<std::optional<ClassificationRecord>> slots(pairs.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= pairs.size()) return;
            const auto& pr = pairs[i];
            ClassificationRecord rec{pr.graph,
                                     pr.tree,
                                     check_reflexive(pr.graph, pr.tree),
                                     std::nullopt,
                                     0,
                                     obstruction_applicable(pr.graph, pr.tree)};
            rec.q_vertex_count = rec.reflexivity.q_vertex_count;
            if (opt.with_normality)
                rec.normality = check_idp(pr.graph, pr.tree, opt.k_max, opt.point_cap);
            slots[i] = std::move(rec);
        }
    };
    unsigned workers = std::max(1u, opt.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    std::vector<ClassificationRecord> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace charpoly

#endif  // CHARPOLY_ANALYSIS_HPP
