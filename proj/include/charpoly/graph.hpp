#ifndef CHARPOLY_GRAPH_HPP
#define CHARPOLY_GRAPH_HPP

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charpoly/errors.hpp"

namespace charpoly {

// Undirected multigraph with loops. Edge ids are positions in `edges`;
// a loop is an edge whose endpoints coincide. Values are immutable after
// construction and construction requires connectivity, so every Multigraph
// in circulation is safe to hand to the polytope constructors.
class Multigraph {
  public:
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : vertex_count_(vertex_count), edges_(std::move(edge_list)) {
        if (vertex_count_ <= 0) throw Error("vertex_count must be positive");
        for (auto& e : edges_) {
            if (e.first < 0 || e.first >= vertex_count_ || e.second < 0 ||
                e.second >= vertex_count_)
                throw Error("edge endpoint out of range");
            if (e.first > e.second) std::swap(e.first, e.second);
        }
        if (!connected()) throw DisconnectedGraph();
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_.at(e); }
    bool is_loop(int e) const { return edges_.at(e).first == edges_.at(e).second; }

    // Loops contribute 2 to the degree of their vertex.
    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges_) {
            if (e.first == v) ++d;
            if (e.second == v) ++d;
        }
        return d;
    }

    // Edge ids incident to v, loops listed twice. For a trivalent vertex this
    // is the triple of edge slots the triangle inequalities range over.
    std::vector<int> incident_slots(int v) const {
        std::vector<int> out;
        for (int e = 0; e < edge_count(); ++e) {
            if (edges_[e].first == v) out.push_back(e);
            if (edges_[e].second == v) out.push_back(e);
        }
        return out;
    }

    int loop_count() const {
        int k = 0;
        for (int e = 0; e < edge_count(); ++e)
            if (is_loop(e)) ++k;
        return k;
    }

    std::vector<int> loops_at(int v) const {
        std::vector<int> out;
        for (int e = 0; e < edge_count(); ++e)
            if (is_loop(e) && edges_[e].first == v) out.push_back(e);
        return out;
    }

    bool operator==(const Multigraph& o) const {
        return vertex_count_ == o.vertex_count_ && sorted_edges() == o.sorted_edges();
    }

    std::vector<std::pair<int, int>> sorted_edges() const {
        auto s = edges_;
        std::sort(s.begin(), s.end());
        return s;
    }

  private:
    bool connected() const {
        std::vector<char> seen(vertex_count_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges_) {
                int u = -1;
                if (e.first == v) u = e.second;
                else if (e.second == v) u = e.first;
                if (u >= 0 && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }

    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
};

// First Betti number |E| - |V| + #components; graphs here are connected.
inline int betti(const Multigraph& g) {
    return g.edge_count() - g.vertex_count() + 1;
}

inline bool is_trivalent(const Multigraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

// An edge subset spanning the graph; free_edges is the complement F(G,T).
class SpanningTree {
  public:
    static SpanningTree of(const Multigraph& g, std::vector<int> ids) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (static_cast<int>(ids.size()) != g.vertex_count() - 1) throw InvalidTree();
        std::vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (int e : ids) {
            if (e < 0 || e >= g.edge_count()) throw InvalidTree();
            auto [u, v] = g.edge(e);
            if (u == v) throw InvalidTree("loops cannot be tree edges");
            int ru = find(u), rv = find(v);
            if (ru == rv) throw InvalidTree("tree edges contain a cycle");
            parent[ru] = rv;
        }
        std::vector<int> free;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!std::binary_search(ids.begin(), ids.end(), e)) free.push_back(e);
        return SpanningTree(std::move(ids), std::move(free));
    }

    const std::vector<int>& tree_edges() const { return tree_edges_; }
    const std::vector<int>& free_edges() const { return free_edges_; }
    bool in_tree(int e) const {
        return std::binary_search(tree_edges_.begin(), tree_edges_.end(), e);
    }

    bool operator==(const SpanningTree& o) const { return tree_edges_ == o.tree_edges_; }

  private:
    SpanningTree(std::vector<int> t, std::vector<int> f)
        : tree_edges_(std::move(t)), free_edges_(std::move(f)) {}
    std::vector<int> tree_edges_;
    std::vector<int> free_edges_;
};

// All spanning trees in lexicographic edge-id order. Loops never qualify.
inline std::vector<SpanningTree> spanning_trees(const Multigraph& g) {
    std::vector<int> candidates;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!g.is_loop(e)) candidates.push_back(e);
    const int need = g.vertex_count() - 1;
    std::vector<SpanningTree> out;
    std::vector<int> chosen;

    // union-find with rollback for backtracking
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (static_cast<int>(chosen.size()) == need) {
            out.push_back(SpanningTree::of(g, chosen));
            return;
        }
        if (idx >= candidates.size()) return;
        if (candidates.size() - idx < static_cast<size_t>(need) - chosen.size()) return;
        int e = candidates[idx];
        auto [u, v] = g.edge(e);
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            chosen.push_back(e);
            self(self, idx + 1);
            chosen.pop_back();
            parent[ru] = ru;
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const SpanningTree& a, const SpanningTree& b) {
        return a.tree_edges() < b.tree_edges();
    });
    return out;
}

// Attach a loop at every leaf of a tree whose interior vertices are trivalent.
// The result is a trivalent loop-tree graph, the family whose polytopes are
// reflexive and normal; its spanning tree is the input tree.
inline std::pair<Multigraph, SpanningTree> loop_tree(const Multigraph& t) {
    if (t.edge_count() != t.vertex_count() - 1)
        throw NotATree("input is not a tree");
    if (t.vertex_count() == 1)
        throw NotATree("single-vertex tree rejected");
    std::vector<int> leaves;
    for (int v = 0; v < t.vertex_count(); ++v) {
        int d = t.degree(v);
        if (d == 1) leaves.push_back(v);
        else if (d != 3) throw NotTrivalentInterior();
    }
    if (leaves.empty()) throw NotATree("tree has no leaf");
    auto edges = t.edges();
    std::vector<int> tree_ids(edges.size());
    std::iota(tree_ids.begin(), tree_ids.end(), 0);
    for (int v : leaves) edges.emplace_back(v, v);
    Multigraph g(t.vertex_count(), std::move(edges));
    return {g, SpanningTree::of(g, tree_ids)};
}

inline bool is_loop_tree_pair(const Multigraph& g, const SpanningTree& t) {
    if (!is_trivalent(g)) return false;
    for (int e : t.free_edges())
        if (!g.is_loop(e)) return false;
    return true;
}

// One side of the split in contract_split. A component that degenerates to a
// single loop is flagged `interval`: its polytope is the unit interval.
struct ContractComponent {
    bool interval = false;
    Multigraph graph;
    SpanningTree tree;
};

// Delete tree edge e of a loop-tree pair and concatenate the edge pairs
// adjacent to e; returns the two connected components with their trees.
inline std::pair<ContractComponent, ContractComponent> contract_split(
    const Multigraph& g, const SpanningTree& t, int e) {
    if (!t.in_tree(e)) throw NotTreeEdge();
    if (!is_loop_tree_pair(g, t)) throw NotLoopTree();

    auto [u, v] = g.edge(e);
    // Surviving edges as (a, b, sort_key); merged edges keep the smaller
    // original id of the pair they replace as their key.
    struct RawEdge {
        int a, b, key;
    };
    std::vector<RawEdge> raw;
    std::vector<char> dropped(g.edge_count(), 0);
    dropped[e] = 1;
    std::vector<char> interval_vertex(g.vertex_count(), 0);
    int seed_u = -1, seed_v = -1;  // one surviving vertex per side

    for (int w : {u, v}) {
        int& seed = (w == u ? seed_u : seed_v);
        auto loops = g.loops_at(w);
        if (!loops.empty()) {
            // Leaf end of e: the loop side degenerates to the interval marker.
            interval_vertex[w] = 1;
            seed = w;
            continue;
        }
        std::vector<int> others;
        for (int f = 0; f < g.edge_count(); ++f) {
            if (f == e || dropped[f]) continue;
            auto [a, b] = g.edge(f);
            if (a == w || b == w) others.push_back(f);
        }
        if (others.size() != 2) throw NotLoopTree();
        auto far = [&](int f) {
            auto [a, b] = g.edge(f);
            return a == w ? b : a;
        };
        // w is merged away; the concatenated edge replaces its two neighbors
        raw.push_back({far(others[0]), far(others[1]), std::min(others[0], others[1])});
        dropped[others[0]] = dropped[others[1]] = 1;
        seed = far(others[0]);
    }
    for (int f = 0; f < g.edge_count(); ++f)
        if (!dropped[f]) raw.push_back({g.edge(f).first, g.edge(f).second, f});
    std::sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
        return a.key < b.key;
    });

    // Components of the surviving graph (interval vertices keep their loops).
    std::vector<int> comp(g.vertex_count(), -1);
    auto flood = [&](int start, int c) {
        std::vector<int> stack{start};
        comp[start] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& r : raw) {
                int y = -1;
                if (r.a == x) y = r.b;
                else if (r.b == x) y = r.a;
                if (y >= 0 && comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
            }
        }
    };
    flood(seed_u, 0);
    if (comp[seed_v] >= 0) throw NotLoopTree("deleting a tree edge must split the graph");
    flood(seed_v, 1);

    auto build = [&](int c) -> ContractComponent {
        std::vector<int> vmap(g.vertex_count(), -1);
        int nv = 0;
        for (int x = 0; x < g.vertex_count(); ++x)
            if (comp[x] == c) vmap[x] = nv++;
        std::vector<std::pair<int, int>> edge_list;
        std::vector<int> tree_ids;
        bool interval = false;
        for (const auto& r : raw) {
            if (comp[r.a] != c) continue;
            edge_list.emplace_back(vmap[r.a], vmap[r.b]);
            if (r.a != r.b) tree_ids.push_back(static_cast<int>(edge_list.size()) - 1);
        }
        for (int x = 0; x < g.vertex_count(); ++x)
            if (comp[x] == c && interval_vertex[x] && nv == 1) interval = true;
        Multigraph cg(nv, std::move(edge_list));
        return {interval, cg, SpanningTree::of(cg, tree_ids)};
    };
    return {build(0), build(1)};
}

namespace detail {

// Iterated refinement of vertex colors by loop count and the multiset of
// (neighbor color, edge color, multiplicity) over incident edges. The class
// order depends only on isomorphism-invariant data, so restricting the
// canonical-form search to class-respecting relabelings is sound.
inline std::vector<int> refine_colors(const Multigraph& g,
                                      const std::vector<int>* edge_color = nullptr) {
    const int n = g.vertex_count();
    auto ecol = [&](int e) { return edge_color ? (*edge_color)[e] : 0; };
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::map<std::pair<int, int>, int> nb;  // (neighbor color, edge color) -> count
            std::map<int, int> loops;               // edge color -> count
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [a, b] = g.edge(e);
                if (a == v && b == v) ++loops[ecol(e)];
                else if (a == v) ++nb[{color[b], ecol(e)}];
                else if (b == v) ++nb[{color[a], ecol(e)}];
            }
            sig[v].push_back(color[v]);
            for (auto& [c, m] : loops) {
                sig[v].push_back(-1 - c);
                sig[v].push_back(m);
            }
            for (auto& [key, m] : nb) {
                sig[v].push_back(key.first);
                sig[v].push_back(key.second);
                sig[v].push_back(m);
            }
        }
        std::map<std::vector<int>, int> dense;
        for (int v = 0; v < n; ++v) dense.emplace(sig[v], 0);
        int next = 0;
        for (auto& [s, id] : dense) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = dense[sig[v]];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

// Run fn over every vertex relabeling that respects the given color
// classes: the class with the smallest color gets the first block of new
// labels, and members permute freely within their block. perm[v] = new label.
template <typename Fn>
void for_each_class_relabeling(const Multigraph& g, const std::vector<int>& color, Fn&& fn) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> classes;
    {
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
        for (auto& [c, vs] : by_color) classes.push_back(vs);
    }
    std::vector<int> perm(n, -1);
    int base = 0;
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            fn(perm);
            return;
        }
        std::vector<int>& cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        int start = base;
        base += static_cast<int>(cls.size());
        do {
            for (size_t i = 0; i < cls.size(); ++i) perm[cls[i]] = start + static_cast<int>(i);
            self(self, ci + 1);
        } while (std::next_permutation(cls.begin(), cls.end()));
        base = start;
    };
    rec(rec, 0);
}

// Backtracking isomorphism test for small multigraphs. Vertices of `a` are
// mapped in order onto same-color vertices of `b`, checking edge
// multiplicities of the mapped prefix as it grows.
inline bool iso_backtrack(const Multigraph& a, const Multigraph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> ca = refine_colors(a), cb = refine_colors(b);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }
    auto mult = [](const Multigraph& g, int u, int v) {
        int m = 0;
        for (const auto& e : g.edges())
            if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) ++m;
        return m;
    };
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || ca[v] != cb[w]) continue;
            bool ok = mult(a, v, v) == mult(b, w, w);
            for (int u = 0; ok && u < v; ++u)
                if (mult(a, v, u) != mult(b, w, image[u])) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// Cheap isomorphism-invariant bucket key: the sorted refined color
// histogram together with the sorted per-vertex (loops, parallel profile).
inline std::vector<int> invariant_key(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> profile(n);
    for (int v = 0; v < n; ++v) {
        std::map<int, int> mult;
        int loops = 0;
        for (const auto& e : g.edges()) {
            if (e.first == v && e.second == v) ++loops;
            else if (e.first == v) ++mult[e.second];
            else if (e.second == v) ++mult[e.first];
        }
        profile[v].push_back(loops);
        std::vector<int> ms;
        for (auto& [u, m] : mult) ms.push_back(m);
        std::sort(ms.begin(), ms.end());
        for (int m : ms) profile[v].push_back(m);
    }
    std::sort(profile.begin(), profile.end());
    std::vector<int> key{n, g.edge_count()};
    for (auto& p : profile) {
        key.push_back(-1);
        key.insert(key.end(), p.begin(), p.end());
    }
    return key;
}

// Run fn over every permutation of the vertices that maps each refined
// color class to itself. Automorphisms all live here.
template <typename Fn>
void for_each_color_preserving_permutation(const Multigraph& g, Fn&& fn) {
    const int n = g.vertex_count();
    std::vector<int> color = refine_colors(g);
    std::vector<std::vector<int>> classes;
    {
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
        for (auto& [c, vs] : by_color) classes.push_back(vs);
    }
    std::vector<int> perm(n, -1);
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            fn(perm);
            return;
        }
        const std::vector<int> slots = classes[ci];  // sorted member list
        std::vector<int> images = slots;
        do {
            for (size_t i = 0; i < slots.size(); ++i) perm[slots[i]] = images[i];
            self(self, ci + 1);
        } while (std::next_permutation(images.begin(), images.end()));
    };
    rec(rec, 0);
}

}  // namespace detail

// Edge-colored canonical form: minimum sorted (u, v, color) list over all
// class-respecting relabelings. With all colors equal this is the plain
// canonical form.
inline std::vector<std::array<int, 3>> canonical_colored_edges(
    const Multigraph& g, const std::vector<int>& edge_color) {
    std::vector<std::array<int, 3>> best;
    bool have = false;
    auto color = detail::refine_colors(g, &edge_color);
    detail::for_each_class_relabeling(g, color, [&](const std::vector<int>& perm) {
        std::vector<std::array<int, 3>> cur;
        cur.reserve(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            int a = perm[g.edge(e).first], b = perm[g.edge(e).second];
            if (a > b) std::swap(a, b);
            cur.push_back({a, b, edge_color[e]});
        }
        std::sort(cur.begin(), cur.end());
        if (!have || cur < best) {
            best = std::move(cur);
            have = true;
        }
    });
    return best;
}

inline std::vector<std::array<int, 3>> canonical_edges(const Multigraph& g) {
    return canonical_colored_edges(g, std::vector<int>(g.edge_count(), 0));
}

// Relabel vertices by the permutation achieving the canonical form.
inline Multigraph canonical_graph(const Multigraph& g) {
    auto canon = canonical_edges(g);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(canon.size());
    for (const auto& t : canon) edges.emplace_back(t[0], t[1]);
    return Multigraph(g.vertex_count(), std::move(edges));
}

inline bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
    return detail::iso_backtrack(a, b);
}

// (graph, tree) pairs compared as edge-colored graphs, tree edges marked.
inline std::vector<std::array<int, 3>> canonical_pair_edges(const Multigraph& g,
                                                            const SpanningTree& t) {
    std::vector<int> color(g.edge_count(), 0);
    for (int e : t.tree_edges()) color[e] = 1;
    return canonical_colored_edges(g, color);
}

inline bool are_isomorphic_pairs(const Multigraph& a, const SpanningTree& ta,
                                 const Multigraph& b, const SpanningTree& tb) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_pair_edges(a, ta) == canonical_pair_edges(b, tb);
}

// Vertex permutations preserving the edge multiset.
inline std::vector<std::vector<int>> automorphisms(const Multigraph& g) {
    auto base = g.sorted_edges();
    std::vector<std::vector<int>> out;
    detail::for_each_color_preserving_permutation(g, [&](const std::vector<int>& perm) {
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(base.size());
        for (const auto& e : g.edges()) {
            int a = perm[e.first], b = perm[e.second];
            if (a > b) std::swap(a, b);
            mapped.emplace_back(a, b);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == base) out.push_back(perm);
    });
    return out;
}

// Spanning trees grouped up to graph automorphism; one lexicographically
// smallest representative per class, classes in lex order of representatives.
inline std::vector<SpanningTree> spanning_tree_classes(const Multigraph& g) {
    auto trees = spanning_trees(g);
    auto auts = automorphisms(g);
    // A tree maps under an automorphism to the multiset of image vertex
    // pairs; parallel edges are interchangeable so the pair multiset is the
    // right invariant.
    auto pair_multiset = [&](const SpanningTree& t,
                             const std::vector<int>& perm) {
        std::vector<std::pair<int, int>> ps;
        for (int e : t.tree_edges()) {
            int a = perm[g.edge(e).first], b = perm[g.edge(e).second];
            if (a > b) std::swap(a, b);
            ps.emplace_back(a, b);
        }
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    std::vector<int> id(g.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<SpanningTree> reps;
    for (const auto& t : trees) {
        if (seen.count(pair_multiset(t, id))) continue;
        reps.push_back(t);
        for (const auto& perm : auts) seen.insert(pair_multiset(t, perm));
    }
    return reps;
}

// All connected trivalent multigraphs of the given first Betti number, up to
// isomorphism. Generation pairs half-edges: repeatedly match the lowest open
// slot, forming either a loop or an edge to a later vertex, with choices at
// each head vertex taken in non-decreasing endpoint order so every labeled
// multigraph appears exactly once.
inline std::vector<Multigraph> enumerate_trivalent(int genus) {
    if (genus < 2 || genus > 5) throw GenusOutOfRange();
    const int n = 2 * genus - 2;
    std::vector<int> open(n, 3);
    std::vector<std::pair<int, int>> edges;
    // invariant-key buckets of representatives; full isomorphism only runs
    // against same-bucket candidates
    std::map<std::vector<int>, std::vector<Multigraph>> buckets;
    std::vector<int> last(n, 0);

    auto rec = [&](auto&& self, int head) -> void {
        while (head < n && open[head] == 0) ++head;
        if (head == n) {
            // connectivity check on the raw edge list
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int v) {
                while (parent[v] != v) v = parent[v] = parent[parent[v]];
                return v;
            };
            int comps = n;
            for (auto& [a, b] : edges) {
                int ra = find(a), rb = find(b);
                if (ra != rb) {
                    parent[ra] = rb;
                    --comps;
                }
            }
            if (comps != 1) return;
            Multigraph g(n, edges);
            auto& bucket = buckets[detail::invariant_key(g)];
            for (const auto& rep : bucket)
                if (detail::iso_backtrack(g, rep)) return;
            bucket.push_back(std::move(g));
            return;
        }
        if (open[head] >= 2 && last[head] <= head) {
            open[head] -= 2;
            int saved = last[head];
            last[head] = head;
            edges.emplace_back(head, head);
            self(self, head);
            edges.pop_back();
            last[head] = saved;
            open[head] += 2;
        }
        for (int u = std::max(head + 1, last[head]); u < n; ++u) {
            if (open[u] == 0) continue;
            --open[head];
            --open[u];
            int saved = last[head];
            last[head] = u;
            edges.emplace_back(head, u);
            self(self, head);
            edges.pop_back();
            last[head] = saved;
            ++open[head];
            ++open[u];
        }
    };
    rec(rec, 0);
    std::vector<std::pair<std::vector<std::array<int, 3>>, Multigraph>> keyed;
    for (auto& [k, bucket] : buckets)
        for (auto& g : bucket) keyed.emplace_back(canonical_edges(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Multigraph> out;
    out.reserve(keyed.size());
    for (auto& [k, g] : keyed) out.push_back(std::move(g));
    return out;
}

// --- text format -----------------------------------------------------------
//
//   # comment
//   vertices <n>
//   edge <u> <v>
//   tree <id> <id> ...     (optional)

struct ParsedGraph {
    Multigraph graph;
    std::optional<std::vector<int>> tree_ids;
};

inline ParsedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::optional<std::vector<int>> tree;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "vertices") {
            if (!(ls >> n)) throw Error("graph text: bad vertices line");
        } else if (word == "edge") {
            int u, v;
            if (!(ls >> u >> v)) throw Error("graph text: bad edge line");
            edges.emplace_back(u, v);
        } else if (word == "tree") {
            std::vector<int> ids;
            int e;
            while (ls >> e) ids.push_back(e);
            tree = ids;
        } else {
            throw Error("graph text: unknown directive '" + word + "'");
        }
    }
    if (n < 0) throw Error("graph text: missing vertices line");
    return {Multigraph(n, std::move(edges)), std::move(tree)};
}

inline std::string graph_to_text(const Multigraph& g,
                                 const SpanningTree* tree = nullptr) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto& e : g.edges()) out << "edge " << e.first << " " << e.second << "\n";
    if (tree) {
        out << "tree";
        for (int e : tree->tree_edges()) out << " " << e;
        out << "\n";
    }
    return out.str();
}

}  // namespace charpoly

#endif  // CHARPOLY_GRAPH_HPP
