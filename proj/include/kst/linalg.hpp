#pragma once

#include "kst/algnum.hpp"

#include <optional>
#include <vector>

// Small exact dense linear algebra over a field K (Rational or AlgNum).
// Everything is Gaussian elimination with exact zero tests; sizes here are
// tiny (lattice rank <= 10, section spaces <= 2000 over Q).

namespace kst::lin {

inline bool entry_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool entry_is_zero(const AlgNum& a) { return a.is_zero(); }

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Solves A x = b for square A; returns nullopt when A is singular.
template <class K>
std::optional<std::vector<K>> solve(Matrix<K> a, std::vector<K> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && entry_is_zero(a[piv][col])) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || entry_is_zero(a[r][col])) continue;
            K f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
            b[r] = b[r] - f * b[col];
        }
    }
    std::vector<K> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

template <class K>
K determinant(Matrix<K> a) {
    const std::size_t n = a.size();
    K det = K(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && entry_is_zero(a[piv][col])) ++piv;
        if (piv == n) return K(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (entry_is_zero(a[r][col])) continue;
            K f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return det;
}

// Reduced row echelon form in place; returns the pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && entry_is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        K inv = K(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || entry_is_zero(a[i][c])) continue;
            K f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> a) {
    return rref(a).size();
}

} // namespace kst::lin
