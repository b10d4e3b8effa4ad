#ifndef CHARPOLY_LATTICE_HPP
#define CHARPOLY_LATTICE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "charpoly/graph.hpp"
#include "charpoly/linalg.hpp"
#include "charpoly/rational.hpp"

namespace charpoly {

// A full-rank lattice (1/d) B Z^n with integer basis matrix B (columns are
// generators). M_Gamma has d = 1; its dual N_Gamma generally needs d = 2.
class GraphLattice {
  public:
    GraphLattice(int ambient_dim, Int denominator, std::vector<std::vector<Int>> basis_cols)
        : dim_(ambient_dim), den_(std::move(denominator)), cols_(std::move(basis_cols)) {
        if (den_ <= 0) throw Error("lattice denominator must be positive");
        if (static_cast<int>(cols_.size()) != dim_) throw DimensionMismatch();
        RatMat b(dim_, EdgeVector(dim_));
        for (int c = 0; c < dim_; ++c) {
            if (static_cast<int>(cols_[c].size()) != dim_) throw DimensionMismatch();
            for (int r = 0; r < dim_; ++r) b[r][c] = Rat(cols_[c][r]);
        }
        auto inv = invert(b);
        if (!inv) throw Error("lattice basis is singular");
        inv_ = std::move(*inv);
    }

    static GraphLattice standard(int n) {
        std::vector<std::vector<Int>> cols(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i) cols[i][i] = 1;
        return GraphLattice(n, 1, std::move(cols));
    }

    // The even-tuple lattice (2Z)^n used for Delta(T).
    static GraphLattice even(int n) {
        std::vector<std::vector<Int>> cols(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i) cols[i][i] = 2;
        return GraphLattice(n, 1, std::move(cols));
    }

    int ambient_dim() const { return dim_; }
    const Int& denominator() const { return den_; }
    const std::vector<std::vector<Int>>& basis_columns() const { return cols_; }

    // Coordinates of p in this basis: x with (1/d) B x = p.
    EdgeVector coordinates(const EdgeVector& p) const {
        if (static_cast<int>(p.size()) != dim_) throw DimensionMismatch();
        EdgeVector scaled(p.size());
        for (size_t i = 0; i < p.size(); ++i) scaled[i] = p[i] * Rat(den_);
        return mat_vec(inv_, scaled);
    }

    bool contains(const EdgeVector& p) const {
        for (const Rat& c : coordinates(p))
            if (!is_integer(c)) return false;
        return true;
    }

    // Generator of the basis as an ambient vector.
    EdgeVector generator(int c) const {
        EdgeVector v(dim_);
        for (int r = 0; r < dim_; ++r) v[r] = Rat(cols_[c][r]) / Rat(den_);
        return v;
    }

    // Dual lattice {b : <a,b> in Z for all a in the lattice}. With basis
    // matrix G = (1/d) B the dual basis is G^{-T}, whose columns are the
    // rows of G^{-1}.
    GraphLattice dual() const {
        RatMat b(dim_, EdgeVector(dim_));
        for (int c = 0; c < dim_; ++c)
            for (int r = 0; r < dim_; ++r) b[r][c] = Rat(cols_[c][r]) / Rat(den_);
        auto inv = invert(std::move(b));
        RatMat dual_cols = *inv;  // row r = dual generator r
        Int d = 1;
        for (const auto& col : dual_cols)
            for (const Rat& x : col) d = lcm(d, rat_den(x));
        std::vector<std::vector<Int>> cols(dim_, std::vector<Int>(dim_));
        for (int c = 0; c < dim_; ++c)
            for (int r = 0; r < dim_; ++r) {
                Rat scaled = dual_cols[c][r] * Rat(d);
                cols[c][r] = rat_num(scaled);
            }
        return GraphLattice(dim_, d, std::move(cols));
    }

    // Lattices are equal iff each basis is contained in the other.
    bool same_lattice(const GraphLattice& o) const {
        if (dim_ != o.dim_) return false;
        for (int c = 0; c < dim_; ++c)
            if (!o.contains(generator(c)) || !contains(o.generator(c))) return false;
        return true;
    }

  private:
    int dim_;
    Int den_;
    std::vector<std::vector<Int>> cols_;
    RatMat inv_;  // inverse of B, cached for membership tests
};

// M_Gamma: integer edge weightings whose incident sums are even at every
// vertex, loops counting twice. Basis from the GF(2) parity system: kernel
// lifts on free coordinates, doubled unit vectors on pivot coordinates.
inline GraphLattice m_lattice(const Multigraph& g) {
    const int n = g.edge_count();
    if (n > 63) throw Error("too many edges for the parity solver");
    // One GF(2) row per vertex; loops contribute 0 mod 2.
    std::vector<uint64_t> rows;
    for (int v = 0; v < g.vertex_count(); ++v) {
        uint64_t r = 0;
        for (int e = 0; e < n; ++e) {
            auto [a, b] = g.edge(e);
            if ((a == v) != (b == v)) r ^= (uint64_t{1} << e);
        }
        if (r) rows.push_back(r);
    }
    // reduced row echelon form over GF(2)
    std::vector<int> pivot_of_row;
    size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && !(rows[piv] >> col & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
        pivot_of_row.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(n, 0);
    for (size_t r = 0; r < rank; ++r) is_pivot[pivot_of_row[r]] = 1;

    std::vector<std::vector<Int>> cols;
    for (int j = 0; j < n; ++j) {
        std::vector<Int> col(n, 0);
        if (is_pivot[j]) {
            col[j] = 2;
        } else {
            col[j] = 1;
            for (size_t r = 0; r < rank; ++r)
                if (rows[r] >> j & 1) col[pivot_of_row[r]] = 1;
        }
        cols.push_back(std::move(col));
    }
    return GraphLattice(n, 1, std::move(cols));
}

inline GraphLattice n_lattice(const Multigraph& g) { return m_lattice(g).dual(); }

// The unique positive multiple of v that is a primitive vector of l.
inline EdgeVector primitive_scale(const GraphLattice& l, const EdgeVector& v) {
    if (is_zero(v)) throw ZeroVector();
    EdgeVector x = l.coordinates(v);
    Int t = 1;
    for (const Rat& c : x) t = lcm(t, rat_den(c));
    Int gg = 0;
    std::vector<Int> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        y[i] = rat_num(x[i]) * (t / rat_den(x[i]));
        gg = gcd(gg, y[i]);
    }
    Rat factor = Rat(t) / Rat(gg);
    return vec_scale(v, factor);
}

inline bool is_primitive(const GraphLattice& l, const EdgeVector& v) {
    return !is_zero(v) && l.contains(v) && primitive_scale(l, v) == v;
}

}  // namespace charpoly

#endif  // CHARPOLY_LATTICE_HPP
