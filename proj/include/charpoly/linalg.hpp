#ifndef CHARPOLY_LINALG_HPP
#define CHARPOLY_LINALG_HPP

#include <optional>
#include <vector>

#include "charpoly/rational.hpp"

namespace charpoly {

// Dense rational matrix, row major. Plain Gaussian elimination is all the
// library needs: every matrix here is tiny (ambient dimension <= 16).
using RatMat = std::vector<EdgeVector>;

inline int mat_rank(RatMat m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

// Rank of the affine span of a point set (0 for a single point).
inline int affine_rank(const std::vector<EdgeVector>& pts) {
    if (pts.size() <= 1) return 0;
    RatMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
    return mat_rank(std::move(diffs));
}

// Solve the square system a x = b exactly. Empty result when a is singular.
inline std::optional<EdgeVector> solve_square(RatMat a, EdgeVector b) {
    const size_t n = a.size();
    if (n == 0) return EdgeVector{};
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    EdgeVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Exact inverse of a square matrix. Empty result when singular.
inline std::optional<RatMat> invert(RatMat a) {
    const size_t n = a.size();
    RatMat inv(n, EdgeVector(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Rat d = a[col][col];
        for (size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

inline RatMat transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat t(a[0].size(), EdgeVector(a.size()));
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < a[r].size(); ++c) t[c][r] = a[r][c];
    return t;
}

inline EdgeVector mat_vec(const RatMat& a, const EdgeVector& x) {
    EdgeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

}  // namespace charpoly

#endif  // CHARPOLY_LINALG_HPP
