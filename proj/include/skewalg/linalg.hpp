#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over any field adapter (FiniteField, PrimeField, ...).
 *
 * Vectors are row vectors; a matrix is a vector of rows.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace skewalg {

template <class V>
using Matrix = std::vector<std::vector<V>>;

template <class K>
Matrix<typename K::value_type> zero_matrix(const K& F, std::size_t rows, std::size_t cols) {
    return Matrix<typename K::value_type>(rows, std::vector<typename K::value_type>(cols, F.zero()));
}

template <class K>
Matrix<typename K::value_type> identity_matrix(const K& F, std::size_t n) {
    auto m = zero_matrix(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = F.one();
    return m;
}

template <class V>
Matrix<V> transpose(const Matrix<V>& m) {
    if (m.empty()) return {};
    Matrix<V> t(m[0].size(), std::vector<V>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

/// Product of an a x b and a b x c matrix. An empty left factor needs the column count.
template <class K>
Matrix<typename K::value_type> matmul(const K& F, const Matrix<typename K::value_type>& a,
                                      const Matrix<typename K::value_type>& b, std::size_t cols = 0) {
    const std::size_t inner = b.size();
    const std::size_t c = b.empty() ? cols : b[0].size();
    Matrix<typename K::value_type> out = zero_matrix(F, a.size(), c);
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(a[i].size() == inner, "matrix dimensions do not match");
        for (std::size_t l = 0; l < inner; ++l) {
            if (F.is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] = F.add(out[i][j], F.mul(a[i][l], b[l][j]));
        }
    }
    return out;
}

/// Row vector times matrix.
template <class K>
std::vector<typename K::value_type> vecmul(const K& F, const std::vector<typename K::value_type>& v,
                                           const Matrix<typename K::value_type>& m, std::size_t cols) {
    std::vector<typename K::value_type> out(cols, F.zero());
    require(v.size() == m.size(), "vector/matrix dimensions do not match");
    for (std::size_t l = 0; l < v.size(); ++l) {
        if (F.is_zero(v[l])) continue;
        for (std::size_t j = 0; j < cols; ++j) out[j] = F.add(out[j], F.mul(v[l], m[l][j]));
    }
    return out;
}

template <class K>
bool matrix_equal(const K& F, const Matrix<typename K::value_type>& a, const Matrix<typename K::value_type>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!F.equal(a[i][j], b[i][j])) return false;
    }
    return true;
}

/// Reduced row echelon form in place; returns the pivot columns. Zero rows are dropped.
template <class K>
std::vector<std::size_t> rref_inplace(const K& F, Matrix<typename K::value_type>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && F.is_zero(m[p][col])) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const auto inv = F.inv(m[row][col]);
        for (auto& x : m[row]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || F.is_zero(m[r][col])) continue;
            const auto c = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] = F.sub(m[r][j], F.mul(c, m[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

template <class K>
Matrix<typename K::value_type> rref(const K& F, Matrix<typename K::value_type> m) {
    rref_inplace(F, m);
    return m;
}

template <class K>
std::size_t rank(const K& F, Matrix<typename K::value_type> m) {
    return rref_inplace(F, m).size();
}

/// Basis (as rows) of {v : m * v^T = 0}, i.e. the right null space; cols is needed when m has no rows.
template <class K>
Matrix<typename K::value_type> kernel(const K& F, Matrix<typename K::value_type> m, std::size_t cols) {
    auto pivots = rref_inplace(F, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix<typename K::value_type> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename K::value_type> v(cols, F.zero());
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Left null space: {u : u * m = 0}.
template <class K>
Matrix<typename K::value_type> left_kernel(const K& F, const Matrix<typename K::value_type>& m) {
    return kernel(F, transpose(m), m.size());
}

/// One solution x of x * m = b (row form), if any.
template <class K>
std::optional<std::vector<typename K::value_type>> solve_left(const K& F, const Matrix<typename K::value_type>& m,
                                                               const std::vector<typename K::value_type>& b) {
    // Solve m^T x^T = b^T via an augmented system.
    const std::size_t n = m.size();
    const std::size_t cols = b.size();
    Matrix<typename K::value_type> aug(cols, std::vector<typename K::value_type>(n + 1, F.zero()));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < n; ++i) aug[j][i] = m[i][j];
        aug[j][n] = b[j];
    }
    auto pivots = rref_inplace(F, aug);
    std::vector<typename K::value_type> x(n, F.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) return std::nullopt;
        x[pivots[r]] = aug[r][n];
    }
    return x;
}

template <class K>
std::optional<Matrix<typename K::value_type>> inverse(const K& F, const Matrix<typename K::value_type>& m) {
    const std::size_t n = m.size();
    Matrix<typename K::value_type> aug(n, std::vector<typename K::value_type>(2 * n, F.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        require(m[i].size() == n, "inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = F.one();
    }
    auto pivots = rref_inplace(F, aug);
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    Matrix<typename K::value_type> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
    return out;
}

template <class K>
typename K::value_type determinant(const K& F, Matrix<typename K::value_type> m) {
    const std::size_t n = m.size();
    auto det = F.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && F.is_zero(m[p][col])) ++p;
        if (p == n) return F.zero();
        if (p != col) {
            std::swap(m[p], m[col]);
            det = F.neg(det);
        }
        det = F.mul(det, m[col][col]);
        const auto inv = F.inv(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (F.is_zero(m[r][col])) continue;
            const auto c = F.mul(m[r][col], inv);
            for (std::size_t j = col; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(c, m[col][j]));
        }
    }
    return det;
}

/// Equality of row spaces.
template <class K>
bool same_row_space(const K& F, const Matrix<typename K::value_type>& a, const Matrix<typename K::value_type>& b) {
    return matrix_equal(F, rref(F, a), rref(F, b));
}

/// True when every row of a lies in the row space of b.
template <class K>
bool row_space_contains(const K& F, const Matrix<typename K::value_type>& b, const Matrix<typename K::value_type>& a) {
    if (a.empty()) return true;
    auto both = b;
    both.insert(both.end(), a.begin(), a.end());
    return rank(F, both) == rank(F, b);
}

}  // namespace skewalg
