#ifndef CHARPOLY_TEST_ORACLES_HPP
#define CHARPOLY_TEST_ORACLES_HPP

// Independent brute-force oracles the main library never touches. Slow and
// simple on purpose: they cross-check the production algorithms on small
// instances.

#include <numeric>
#include <set>
#include <vector>

#include "charpoly/charpoly.hpp"

namespace oracles {

using namespace charpoly;

// Vertex enumeration by trying every dim-subset of rows as a square system.
// Usable up to dimension ~6.
inline std::set<EdgeVector> brute_vertices(const HPolytope& p) {
    const size_t n = static_cast<size_t>(p.dim);
    std::set<EdgeVector> out;
    std::vector<size_t> idx(p.rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (pick.size() == n) {
            RatMat a;
            EdgeVector b;
            for (size_t i : pick) {
                a.push_back(p.rows[i].normal);
                b.push_back(p.rows[i].rhs);
            }
            auto x = solve_square(a, b);
            if (x && satisfies(p, *x)) out.insert(*x);
            return;
        }
        if (p.rows.size() - from < n - pick.size()) return;
        for (size_t i = from; i < p.rows.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Kirchhoff's count of spanning trees: determinant of a Laplacian minor.
// Loops do not contribute.
inline Int matrix_tree_count(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    RatMat lap(n, EdgeVector(n, 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (a == b) continue;
        lap[a][b] -= 1;
        lap[b][a] -= 1;
        lap[a][a] += 1;
        lap[b][b] += 1;
    }
    RatMat minor(n - 1, EdgeVector(n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
    // determinant by elimination
    Rat det = 1;
    for (size_t col = 0; col < minor.size(); ++col) {
        size_t piv = col;
        while (piv < minor.size() && minor[piv][col] == 0) ++piv;
        if (piv == minor.size()) return 0;
        if (piv != col) {
            std::swap(minor[piv], minor[col]);
            det = -det;
        }
        det *= minor[col][col];
        for (size_t r = col + 1; r < minor.size(); ++r) {
            if (minor[r][col] == 0) continue;
            Rat f = minor[r][col] / minor[col][col];
            for (size_t c = col; c < minor.size(); ++c) minor[r][c] -= f * minor[col][c];
        }
    }
    return rat_num(det);
}

// Cycle-space rank |E| - rank_2(incidence matrix), an independent route to
// the first Betti number of a connected graph.
inline int cycle_rank(const Multigraph& g) {
    std::vector<std::vector<int>> rows;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> r(g.edge_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            if ((a == v) != (b == v)) r[e] = 1;
        }
        rows.push_back(r);
    }
    int rank = 0;
    for (int col = 0; col < g.edge_count(); ++col) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col]) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (static_cast<int>(r) != rank && rows[r][col])
                for (int c = 0; c < g.edge_count(); ++c) rows[r][c] ^= rows[rank][c];
        ++rank;
    }
    return g.edge_count() - rank;
}

// Number of classes of Z^n modulo the lattice, assuming 2Z^n is inside it
// (true for every parity lattice M): count classes among {0,1}^n.
inline size_t residue_classes_mod2(const GraphLattice& l) {
    const int n = l.ambient_dim();
    std::vector<EdgeVector> reps;
    for (int mask = 0; mask < (1 << n); ++mask) {
        EdgeVector v(n);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
        bool fresh = true;
        for (const auto& r : reps)
            if (l.contains(vec_sub(v, r))) fresh = false;
        if (fresh) reps.push_back(v);
    }
    return reps.size();
}

// Trivalent multigraph enumeration by a different route: upper-triangular
// multiplicity matrices with loop counts, full-permutation deduplication.
inline std::vector<Multigraph> naive_trivalent(int genus) {
    const int n = 2 * genus - 2;
    std::vector<std::vector<std::pair<int, int>>> found_edges;
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;

    // cell order: loops (v,v), then pairs (u,v)
    std::vector<std::pair<int, int>> cells;
    for (int v = 0; v < n; ++v) cells.emplace_back(v, v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) cells.emplace_back(u, v);

    auto connected = [&]() {
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
        return comps == 1;
    };
    auto canon = [&](const std::vector<std::pair<int, int>>& es) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::pair<int, int>> best;
        bool have = false;
        do {
            std::vector<std::pair<int, int>> cur;
            for (auto& [a, b] : es) {
                int x = perm[a], y = perm[b];
                if (x > y) std::swap(x, y);
                cur.emplace_back(x, y);
            }
            std::sort(cur.begin(), cur.end());
            if (!have || cur < best) {
                best = cur;
                have = true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    std::set<std::vector<std::pair<int, int>>> seen;
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == cells.size()) {
            for (int v = 0; v < n; ++v)
                if (deg[v] != 3) return;
            if (!connected()) return;
            auto key = canon(edges);
            if (seen.insert(key).second) found_edges.push_back(key);
            return;
        }
        auto [u, v] = cells[ci];
        int step = u == v ? 2 : 1;
        int maxm = u == v ? 1 : 3;
        for (int m = 0; m <= maxm; ++m) {
            if (deg[u] + (u == v ? 2 * m : m) > 3 || (u != v && deg[v] + m > 3)) break;
            for (int i = 0; i < m; ++i) edges.emplace_back(u, v);
            deg[u] += step * m;
            if (u != v) deg[v] += m;
            self(self, ci + 1);
            deg[u] -= step * m;
            if (u != v) deg[v] -= m;
            for (int i = 0; i < m; ++i) edges.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<Multigraph> out;
    for (auto& es : found_edges) out.emplace_back(n, es);
    return out;
}

// Box scan without pruning, for cross-checking lattice_points.
inline std::set<EdgeVector> brute_lattice_points(const HPolytope& p, const GraphLattice& l,
                                                 const std::vector<int>& lo,
                                                 const std::vector<int>& hi) {
    std::set<EdgeVector> out;
    const int n = p.dim;
    EdgeVector x(n);
    auto rec = [&](auto&& self, int d) -> void {
        if (d == n) {
            if (satisfies(p, x) && l.contains(x)) out.insert(x);
            return;
        }
        for (int v = lo[d]; v <= hi[d]; ++v) {
            x[d] = Rat(v) / Rat(l.denominator());
            self(self, d + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace oracles

#endif  // CHARPOLY_TEST_ORACLES_HPP
