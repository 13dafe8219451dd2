#pragma once

#include <optional>
#include <vector>

#include "charta/error.hpp"
#include "charta/rational.hpp"

namespace charta {

// Dense rectangular matrix over one scalar kind. Exact-field instances
// (Rational, CycNumber, Fp) feed the elimination routines below; complex
// instances are plumbing for the float pipeline.
template <class T>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c, const T& fill) : rows(r), cols(c), a((size_t)r * c, fill) {}

    T& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const T& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static Matrix identity(int n, const T& like) {
        Matrix m(n, n, ring_zero(like));
        for (int i = 0; i < n; ++i) m.at(i, i) = ring_one(like);
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix out(x.rows, y.cols, ring_zero(x.a.empty() ? y.a[0] : x.a[0]));
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T& xik = x.at(i, k);
                if (is_zero(xik)) continue;
                for (int j = 0; j < y.cols; ++j) out.at(i, j) += xik * y.at(k, j);
            }
        return out;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> out(rows, ring_zero(a[0]));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!is_zero(at(i, j))) out[i] += at(i, j) * v[j];
        return out;
    }
};

// In-place reduced row echelon form; returns pivot column list.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.at(i, c))) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        T inv = ring_one(m.at(r, c)) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            T f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
int rank(Matrix<T> m) {
    return (int)rref(m).size();
}

// Exact basis of the right null space {v : M v = 0}.
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
    if (m.a.empty()) {
        // no constraints: kernel is all of the column space
        std::vector<std::vector<T>> basis;
        return basis;
    }
    T zero = ring_zero(m.a[0]), one = ring_one(m.a[0]);
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<T>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(m.cols, zero);
        v[c] = one;
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < c) v[pivots[r]] = zero - m.at((int)r, c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves M x = b exactly; empty optional when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m0, const std::vector<T>& b) {
    Matrix<T> aug(m0.rows, m0.cols + 1, ring_zero(b.empty() ? m0.a[0] : b[0]));
    for (int i = 0; i < m0.rows; ++i) {
        for (int j = 0; j < m0.cols; ++j) aug.at(i, j) = m0.at(i, j);
        aug.at(i, m0.cols) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == m0.cols) return std::nullopt;
    std::vector<T> x(m0.cols, ring_zero(aug.a[0]));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at((int)r, m0.cols);
    return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m0) {
    if (m0.rows != m0.cols) return std::nullopt;
    int n = m0.rows;
    Matrix<T> aug(n, 2 * n, ring_zero(m0.a[0]));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m0.at(i, j);
        aug.at(i, n + i) = ring_one(m0.a[0]);
    }
    std::vector<int> pivots = rref(aug);
    if ((int)pivots.size() < n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Matrix<T> inv(n, n, ring_zero(m0.a[0]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Dimension of the span of a family of coordinate vectors.
template <class T>
int span_rank(const std::vector<std::vector<T>>& vecs, const T& like) {
    if (vecs.empty()) return 0;
    Matrix<T> m((int)vecs.size(), (int)vecs[0].size(), ring_zero(like));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = vecs[i][j];
    return rank(std::move(m));
}

// True when the two families span the same subspace.
template <class T>
bool same_span(const std::vector<std::vector<T>>& xs, const std::vector<std::vector<T>>& ys, const T& like) {
    int rx = span_rank(xs, like), ry = span_rank(ys, like);
    if (rx != ry) return false;
    std::vector<std::vector<T>> both = xs;
    both.insert(both.end(), ys.begin(), ys.end());
    return span_rank(both, like) == rx;
}

} // namespace charta
