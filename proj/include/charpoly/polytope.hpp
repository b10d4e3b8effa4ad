#ifndef CHARPOLY_POLYTOPE_HPP
#define CHARPOLY_POLYTOPE_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "charpoly/lattice.hpp"
#include "charpoly/linalg.hpp"
#include "charpoly/rational.hpp"

namespace charpoly {

// One inequality normal.x >= rhs. Labels identify rows for provenance
// (facet and divisor reports) and must be unique within a polytope.
struct HRow {
    EdgeVector normal;
    Rat rhs;
    std::string label;
};

struct HPolytope {
    int dim = 0;
    std::vector<HRow> rows;

    const HRow& row_by_label(const std::string& label) const {
        for (const auto& r : rows)
            if (r.label == label) return r;
        throw UnknownLabel("no row labeled '" + label + "'");
    }
};

struct VPolytope {
    int dim = 0;
    std::vector<EdgeVector> vertices;
    std::vector<EdgeVector> rays;  // empty for bounded polytopes
};

inline bool satisfies(const HPolytope& p, const EdgeVector& x) {
    for (const auto& r : p.rows)
        if (dot(r.normal, x) < r.rhs) return false;
    return true;
}

inline bool strictly_satisfies(const HPolytope& p, const EdgeVector& x) {
    for (const auto& r : p.rows)
        if (dot(r.normal, x) <= r.rhs) return false;
    return true;
}

inline std::vector<int> tight_rows_at(const HPolytope& p, const EdgeVector& x) {
    std::vector<int> out;
    for (size_t i = 0; i < p.rows.size(); ++i)
        if (dot(p.rows[i].normal, x) == p.rows[i].rhs) out.push_back(static_cast<int>(i));
    return out;
}

struct DDLimits {
    size_t max_rays = 0;        // 0 = unlimited
    double budget_seconds = 0;  // 0 = unlimited
};

namespace detail {

inline Int int_dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Double description on the cone {y in R^m : rows . y >= 0}. Rows must be
// integral; the cone must be pointed (rank m), which holds for every cone
// this library builds. Returns the extreme rays as primitive integer
// vectors. Rows are inserted cut-smallest-first; each ray carries its dot
// products with all rows plus a tightness bitset over the processed rows,
// and the standard combinatorial adjacency test guards pair combination.
inline std::vector<std::vector<Int>> dd_extreme_rays(
    std::vector<std::vector<Int>> rows, int m, const DDLimits& lim = {}) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto check_budget = [&]() {
        if (lim.budget_seconds > 0 &&
            std::chrono::duration<double>(clock::now() - start).count() > lim.budget_seconds)
            throw ResourceLimit("double description exceeded its time budget");
    };

    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<Int>& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Int& x) { return x == 0; });
                              }),
               rows.end());
    const size_t nrows = rows.size();

    // greedy independent subset for the initial simplicial cone
    std::vector<size_t> base;
    {
        RatMat elim;
        for (size_t i = 0; i < nrows && static_cast<int>(base.size()) < m; ++i) {
            EdgeVector v(m);
            for (int j = 0; j < m; ++j) v[j] = Rat(rows[i][j]);
            for (const auto& b : elim) {
                size_t lead = 0;
                while (lead < b.size() && b[lead] == 0) ++lead;
                if (lead < b.size() && v[lead] != 0) {
                    Rat f = v[lead] / b[lead];
                    for (size_t c = lead; c < v.size(); ++c) v[c] -= f * b[c];
                }
            }
            if (!is_zero(v)) {
                elim.push_back(v);
                std::sort(elim.begin(), elim.end(), [](const EdgeVector& a, const EdgeVector& b2) {
                    auto la = std::find_if(a.begin(), a.end(), [](const Rat& x) { return x != 0; });
                    auto lb = std::find_if(b2.begin(), b2.end(), [](const Rat& x) { return x != 0; });
                    return la - a.begin() < lb - b2.begin();
                });
                base.push_back(i);
            }
        }
    }
    if (static_cast<int>(base.size()) < m)
        throw Unbounded("cone is not pointed: it contains a line");

    struct Ray {
        std::vector<Int> coords;
        std::vector<Int> dots;
        boost::dynamic_bitset<> tight;  // over all rows; only processed bits used
    };

    auto reduce = [](Ray& r) {
        Int g = 0;
        for (const Int& x : r.coords) g = gcd(g, x);
        if (g > 1) {
            for (Int& x : r.coords) x /= g;
            for (Int& x : r.dots) x /= g;
        }
    };
    auto fill_dots = [&](Ray& r) {
        r.dots.resize(nrows);
        r.tight.resize(nrows);
        for (size_t i = 0; i < nrows; ++i) {
            r.dots[i] = int_dot(rows[i], r.coords);
            r.tight[i] = (r.dots[i] == 0);
        }
    };

    std::vector<Ray> R;
    {
        RatMat hb(m, EdgeVector(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) hb[i][j] = Rat(rows[base[i]][j]);
        auto inv = invert(hb);
        if (!inv) throw Error("initial cone basis singular");
        for (int j = 0; j < m; ++j) {
            EdgeVector col(m);
            for (int i = 0; i < m; ++i) col[i] = (*inv)[i][j];
            Ray r;
            r.coords = primitive_integer(col);
            fill_dots(r);
            R.push_back(std::move(r));
        }
    }

    boost::dynamic_bitset<> processed(nrows);
    for (size_t i : base) processed.set(i);

    while (processed.count() < nrows) {
        check_budget();
        // next row: fewest strictly negative rays
        size_t pick = nrows;
        size_t best_neg = 0;
        for (size_t i = 0; i < nrows; ++i) {
            if (processed[i]) continue;
            size_t neg = 0;
            for (const Ray& r : R)
                if (r.dots[i] < 0) ++neg;
            if (pick == nrows || neg < best_neg) {
                pick = i;
                best_neg = neg;
            }
        }

        std::vector<Ray> keep, minus;
        std::vector<size_t> plus_idx;
        for (auto& r : R) {
            if (r.dots[pick] >= 0) keep.push_back(std::move(r));
            else minus.push_back(std::move(r));
        }
        for (size_t i = 0; i < keep.size(); ++i)
            if (keep[i].dots[pick] > 0) plus_idx.push_back(i);

        std::vector<Ray> fresh;
        const size_t min_common = m >= 2 ? static_cast<size_t>(m - 2) : 0;
        size_t pair_counter = 0;
        for (size_t pi : plus_idx) {
            const Ray& p = keep[pi];
            for (const Ray& q : minus) {
                if (((++pair_counter) & 0x3ff) == 0) check_budget();
                boost::dynamic_bitset<> z = p.tight & q.tight & processed;
                if (z.count() < min_common) continue;
                bool adjacent = true;
                for (const Ray& r : keep) {
                    if (&r == &p) continue;
                    if (z.is_subset_of(r.tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (adjacent)
                    for (const Ray& r : minus) {
                        if (&r == &q) continue;
                        if (z.is_subset_of(r.tight)) {
                            adjacent = false;
                            break;
                        }
                    }
                if (!adjacent) continue;

                Ray w;
                w.coords.resize(m);
                w.dots.resize(nrows);
                const Int a = p.dots[pick];   // > 0
                const Int b = -q.dots[pick];  // > 0
                for (int c = 0; c < m; ++c) w.coords[c] = a * q.coords[c] + b * p.coords[c];
                for (size_t i = 0; i < nrows; ++i) w.dots[i] = a * q.dots[i] + b * p.dots[i];
                reduce(w);
                w.tight.resize(nrows);
                for (size_t i = 0; i < nrows; ++i) w.tight[i] = (w.dots[i] == 0);
                fresh.push_back(std::move(w));
                if (lim.max_rays && keep.size() + fresh.size() > lim.max_rays)
                    throw ResourceLimit("double description exceeded its ray cap");
            }
        }
        for (auto& r : fresh) keep.push_back(std::move(r));
        R = std::move(keep);
        processed.set(pick);
        if (R.empty()) break;
    }

    std::vector<std::vector<Int>> out;
    out.reserve(R.size());
    for (auto& r : R) out.push_back(std::move(r.coords));
    std::sort(out.begin(), out.end());
    return out;
}

// Integerize normal.x >= rhs as a primitive integer (normal, rhs) pair with
// the same solution set.
inline std::vector<Int> integer_row(const EdgeVector& normal, const Rat& rhs) {
    const size_t n = normal.size();
    Int l = rat_den(rhs);
    for (const Rat& x : normal) l = lcm(l, rat_den(x));
    std::vector<Int> out(n + 1);
    Int g = 0;
    for (size_t i = 0; i < n; ++i) {
        out[i] = rat_num(normal[i]) * (l / rat_den(normal[i]));
        g = gcd(g, out[i]);
    }
    out[n] = rat_num(rhs) * (l / rat_den(rhs));
    g = gcd(g, out[n]);
    if (g > 1)
        for (Int& x : out) x /= g;
    return out;
}

}  // namespace detail

// Exact vertex enumeration via double description on the homogenization
// cone {(x, t) : normal.x - rhs t >= 0, t >= 0}. Vertices come back in
// canonical (lexicographic) order; unbounded inputs report their recession
// rays as primitive integer directions.
inline VPolytope vertices(const HPolytope& p, const DDLimits& lim = {}) {
    const int n = p.dim;
    std::vector<std::vector<Int>> rows;
    for (const auto& r : p.rows) {
        if (static_cast<int>(r.normal.size()) != n) throw DimensionMismatch();
        if (is_zero(r.normal)) {
            if (r.rhs > 0) throw Infeasible();
            continue;
        }
        auto ir = detail::integer_row(r.normal, r.rhs);
        // homogenized: normal . x - rhs . t >= 0
        ir[n] = -ir[n];
        rows.push_back(std::move(ir));
    }
    std::vector<Int> trow(n + 1, 0);
    trow[n] = 1;
    rows.push_back(std::move(trow));

    auto rays = detail::dd_extreme_rays(std::move(rows), n + 1, lim);

    VPolytope out;
    out.dim = n;
    for (const auto& r : rays) {
        if (r[n] > 0) {
            EdgeVector v(n);
            for (int i = 0; i < n; ++i) v[i] = Rat(r[i]) / Rat(r[n]);
            out.vertices.push_back(std::move(v));
        } else {
            EdgeVector v(n);
            for (int i = 0; i < n; ++i) v[i] = Rat(r[i]);
            out.rays.push_back(std::move(v));
        }
    }
    if (out.vertices.empty()) throw Infeasible();
    std::sort(out.vertices.begin(), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

// Extreme rays of the cone {x : normal_i . x >= 0} given by rational rows.
inline std::vector<EdgeVector> cone_extreme_rays(const std::vector<EdgeVector>& normals,
                                                 int dim, const DDLimits& lim = {}) {
    std::vector<std::vector<Int>> rows;
    for (const auto& nrm : normals) {
        if (is_zero(nrm)) continue;
        std::vector<Int> r = primitive_integer(nrm);
        rows.push_back(std::move(r));
    }
    auto rays = detail::dd_extreme_rays(std::move(rows), dim, lim);
    std::vector<EdgeVector> out;
    for (const auto& r : rays) {
        EdgeVector v(dim);
        for (int i = 0; i < dim; ++i) v[i] = Rat(r[i]);
        out.push_back(std::move(v));
    }
    return out;
}

inline HPolytope dilate(const HPolytope& p, const Rat& k) {
    if (k <= 0) throw NonPositiveFactor();
    HPolytope out = p;
    for (auto& r : out.rows) r.rhs *= k;
    return out;
}

inline HPolytope translate(const HPolytope& p, const EdgeVector& t) {
    if (static_cast<int>(t.size()) != p.dim) throw DimensionMismatch();
    HPolytope out = p;
    for (auto& r : out.rows) r.rhs += dot(r.normal, t);
    return out;
}

// Turn the named inequalities into equalities, encoded as inequality pairs.
inline HPolytope face(const HPolytope& p, const std::vector<std::string>& tight_labels) {
    HPolytope out = p;
    for (const auto& label : tight_labels) {
        const HRow& r = p.row_by_label(label);  // throws UnknownLabel
        HRow opp;
        opp.normal = vec_scale(r.normal, -1);
        opp.rhs = -r.rhs;
        opp.label = "eq:" + label;
        out.rows.push_back(std::move(opp));
    }
    return out;
}

// Affine dimension of the feasible set.
inline int dim(const HPolytope& p) {
    VPolytope v = vertices(p);  // throws Infeasible
    std::vector<EdgeVector> pts = v.vertices;
    for (const auto& r : v.rays) pts.push_back(vec_add(v.vertices[0], r));
    return affine_rank(pts);
}

// Indices of rows defining facets, decided by the affine rank of each row's
// tight vertex set. Expects the full-dimensional bounded case.
inline std::vector<int> facet_row_indices(const HPolytope& p, const VPolytope& v) {
    std::vector<int> out;
    for (size_t i = 0; i < p.rows.size(); ++i) {
        std::vector<EdgeVector> tight;
        for (const auto& x : v.vertices)
            if (dot(p.rows[i].normal, x) == p.rows[i].rhs) tight.push_back(x);
        if (!tight.empty() && affine_rank(tight) == p.dim - 1) out.push_back(static_cast<int>(i));
    }
    return out;
}

// Polar dual {y : y.x >= -1 for all x in p}. Requires the origin strictly
// interior; for rows normalized to n_i . x >= -1 the dual's vertices are
// exactly the irredundant n_i.
inline VPolytope polar_dual(const HPolytope& p, const DDLimits& lim = {}) {
    HPolytope q;
    q.dim = p.dim;
    for (const auto& r : p.rows) {
        if (is_zero(r.normal)) {
            if (r.rhs > 0) throw Infeasible();
            if (r.rhs >= 0) throw OriginNotInterior();
            continue;
        }
        if (r.rhs >= 0) throw OriginNotInterior();
        q.rows.push_back(r);
    }
    VPolytope v = vertices(q, lim);
    if (!v.rays.empty()) throw Unbounded("polar dual of an unbounded polytope");
    VPolytope out;
    out.dim = p.dim;
    std::set<EdgeVector> uniq;
    for (int i : facet_row_indices(q, v)) {
        EdgeVector y = vec_scale(q.rows[i].normal, Rat(-1) / q.rows[i].rhs);
        uniq.insert(std::move(y));
    }
    out.vertices.assign(uniq.begin(), uniq.end());
    return out;
}

// H-representation of the polar dual of a vertex set: rows v.y >= -1.
inline HPolytope polar_h(const VPolytope& v) {
    HPolytope out;
    out.dim = v.dim;
    for (size_t i = 0; i < v.vertices.size(); ++i)
        out.rows.push_back({v.vertices[i], Rat(-1), "polar:v" + std::to_string(i)});
    return out;
}

// All points of the lattice inside a bounded polytope, in lexicographic
// order. Enumerates the integer box of the denominator-cleared polytope with
// per-row suffix-bound pruning, then filters by lattice membership.
// `point_cap` bounds the number of box points admitted to the polytope.
inline std::vector<EdgeVector> lattice_points(const HPolytope& p, const GraphLattice& l,
                                              size_t point_cap = 0) {
    if (p.dim != l.ambient_dim()) throw DimensionMismatch();
    const Int den = l.denominator();
    HPolytope pd = den == 1 ? p : dilate(p, Rat(den));
    VPolytope v = vertices(pd);
    if (!v.rays.empty()) throw Unbounded();
    const int n = p.dim;

    std::vector<Int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rat mn = v.vertices[0][i], mx = mn;
        for (const auto& x : v.vertices) {
            if (x[i] < mn) mn = x[i];
            if (x[i] > mx) mx = x[i];
        }
        // ceil(mn), floor(mx)
        auto floor_div = [](const Int& a, const Int& b) {
            Int q = a / b, r = a % b;
            if (r != 0 && ((r < 0) != (b < 0))) --q;
            return q;
        };
        lo[i] = -floor_div(Int(-rat_num(mn)), rat_den(mn));
        hi[i] = floor_div(rat_num(mx), rat_den(mx));
        if (lo[i] > hi[i]) return {};
    }

    std::vector<std::vector<Int>> rows;
    for (const auto& r : pd.rows) {
        if (is_zero(r.normal)) {
            if (r.rhs > 0) return {};
            continue;
        }
        rows.push_back(detail::integer_row(r.normal, r.rhs));
    }
    const size_t nr = rows.size();
    // suffix_max[i][k]: best possible contribution of coordinates k..n-1 to row i
    std::vector<std::vector<Int>> suffix_max(nr, std::vector<Int>(n + 1, 0));
    for (size_t i = 0; i < nr; ++i)
        for (int k = n - 1; k >= 0; --k) {
            Int a = rows[i][k];
            Int best = a >= 0 ? a * hi[k] : a * lo[k];
            suffix_max[i][k] = suffix_max[i][k + 1] + best;
        }

    std::vector<EdgeVector> out;
    std::vector<Int> z(n);
    std::vector<std::vector<Int>> partial(nr, std::vector<Int>(n + 1, 0));
    size_t admitted = 0;

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (point_cap && ++admitted > point_cap)
                throw ResourceLimit("lattice point enumeration exceeded point cap");
            EdgeVector x(n);
            for (int i = 0; i < n; ++i) x[i] = Rat(z[i]) / Rat(den);
            if (l.contains(x)) out.push_back(std::move(x));
            return;
        }
        for (Int val = lo[depth]; val <= hi[depth]; ++val) {
            z[depth] = val;
            bool ok = true;
            for (size_t i = 0; i < nr; ++i) {
                partial[i][depth + 1] = partial[i][depth] + rows[i][depth] * val;
                if (partial[i][depth + 1] + suffix_max[i][depth + 1] < rows[i][n]) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace charpoly

#endif  // CHARPOLY_POLYTOPE_HPP
