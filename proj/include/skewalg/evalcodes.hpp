#pragma once

/**
 * @file evalcodes.hpp
 * @brief Remainder and operator evaluation codes, Hamming and rank metrics, MDS/MRD checks.
 */

#include <cmath>
#include <optional>
#include <vector>

#include "algset.hpp"
#include "codes.hpp"

namespace skewalg {

enum class Metric { hamming, rank };
enum class CodeKind { MDS, MRD };

/// C_k(Z): generator = first k rows of V_r(Z).
inline LinearCode remainder_code(const OreRing& A, const std::vector<elem>& Z, std::size_t k) {
    require(k >= 1 && k <= Z.size(), "code dimension must satisfy 1 <= k <= r");
    require(rank(A.field(), vandermonde(A, Z)) >= k, "rank of the Vandermonde matrix is below k");
    LinearCode C(A.field_ptr(), Z.size(), vandermonde(A, Z, k));
    if (C.dim() != k) throw std::logic_error("remainder code has the wrong dimension");
    return C;
}

/// C_{k,L}(Z): generator = first k rows of Wr_r(Z).
inline LinearCode operator_code(const OreRing& A, const std::vector<elem>& Z, std::size_t k) {
    require(k >= 1 && k <= Z.size(), "code dimension must satisfy 1 <= k <= r");
    require(rank(A.field(), wronskian(A, Z)) >= k, "rank of the Wronskian matrix is below k");
    LinearCode C(A.field_ptr(), Z.size(), wronskian(A, Z, k));
    if (C.dim() != k) throw std::logic_error("operator code has the wrong dimension");
    return C;
}

inline std::size_t hamming_weight(const std::vector<elem>& v) {
    std::size_t w = 0;
    for (elem e : v) w += e != 0;
    return w;
}

inline std::size_t hamming_distance(const std::vector<elem>& a, const std::vector<elem>& b) {
    require(a.size() == b.size(), "words have different lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

/// Coordinates of z in the basis of F over the fixed field of sigma.
inline std::vector<elem> coords_over_fixed(const OreRing& A, const std::vector<elem>& basis, elem z) {
    // sigma^i(z) = sum_j c_j sigma^i(b_j) with c_j fixed by sigma.
    const std::size_t s = basis.size();
    Matrix<elem> M(s, std::vector<elem>(s));
    std::vector<elem> rhs(s);
    for (std::size_t i = 0; i < s; ++i) {
        rhs[i] = A.sigma(z, static_cast<long long>(i));
        for (std::size_t j = 0; j < s; ++j) M[i][j] = A.sigma(basis[j], static_cast<long long>(i));
    }
    auto c = solve_left(A.field(), transpose(M), rhs);
    if (!c) throw std::logic_error("basis over the fixed field is not a basis");
    return *c;
}

/// Dimension over F^sigma of the span of the coordinates of v.
inline std::size_t rank_of_word(const OreRing& A, const std::vector<elem>& v) {
    const auto basis = A.basis_over_fixed();
    Matrix<elem> rows;
    for (elem z : v) rows.push_back(coords_over_fixed(A, basis, z));
    // Entries lie in F^sigma, and rank does not change under field extension.
    return rank(A.field(), rows);
}

inline std::size_t rank_distance(const OreRing& A, const std::vector<elem>& a, const std::vector<elem>& b) {
    require(a.size() == b.size(), "words have different lengths");
    std::vector<elem> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = A.field().sub(a[i], b[i]);
    return rank_of_word(A, d);
}

struct DistanceResult {
    std::size_t distance = 0;  ///< 0 for the zero code
    std::vector<elem> witness;  ///< a nonzero codeword of minimum weight
};

/// Minimum weight over nonzero codewords by enumerating all messages.
inline DistanceResult min_distance(const OreRing& A, const LinearCode& C, Metric metric) {
    const double count = std::pow(static_cast<double>(A.field().size()), static_cast<double>(C.dim()));
    guard(count <= 1048576.0, "message space exceeds 2^20");
    DistanceResult best;
    if (C.dim() == 0) return best;
    best.distance = C.length() + 1;
    const elem size = A.field().size();
    std::vector<elem> m(C.dim(), 0);
    const auto basis = A.basis_over_fixed();
    while (true) {
        std::size_t pos = 0;
        while (pos < m.size() && ++m[pos] == size) m[pos++] = 0;
        if (pos == m.size()) break;
        const auto c = C.encode(m);
        std::size_t w;
        if (metric == Metric::hamming) {
            w = hamming_weight(c);
        } else {
            Matrix<elem> rows;
            for (elem z : c) rows.push_back(coords_over_fixed(A, basis, z));
            w = rank(A.field(), rows);
        }
        if (w < best.distance) {
            best.distance = w;
            best.witness = c;
        }
    }
    return best;
}

/// Any r - k columns of the parity-check matrix are independent (the MDS column criterion).
inline bool parity_columns_criterion(const LinearCode& C) {
    const Matrix<elem> H = C.parity_check();
    const std::size_t n = C.length(), t = H.size();
    if (t == 0) return true;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        Matrix<elem> sub(t, std::vector<elem>(t));
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) sub[i][j] = H[i][idx[j]];
        if (rank(C.field(), sub) < t) return false;
        std::size_t p = t;
        while (p-- > 0) {
            if (idx[p] < n - t + p) {
                ++idx[p];
                for (std::size_t j = p + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (p == 0) return true;
        }
    }
}

/// Rank-metric counterpart: rank(Y H^T) = r - k for every full-rank (r-k) x r matrix Y over F^sigma.
/// Returns nullopt when the enumeration would exceed 2^16 matrices or k > 4.
inline std::optional<bool> gabidulin_criterion(const OreRing& A, const LinearCode& C) {
    const Matrix<elem> H = C.parity_check();
    const std::size_t r = C.length(), t = H.size();
    if (C.dim() > 4) return std::nullopt;
    if (t == 0) return true;
    const auto fixed = A.fixed_field();
    const double count = std::pow(static_cast<double>(fixed.size()), static_cast<double>(t * r));
    if (count > 65536.0) return std::nullopt;
    const Matrix<elem> Ht = transpose(H);
    std::vector<std::size_t> digits(t * r, 0);
    while (true) {
        Matrix<elem> Y(t, std::vector<elem>(r));
        for (std::size_t i = 0; i < t * r; ++i) Y[i / r][i % r] = fixed[digits[i]];
        if (rank(A.field(), Y) == t && rank(A.field(), matmul(A.field(), Y, Ht)) != t) return false;
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == fixed.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    return true;
}

struct CertifyResult {
    bool holds = false;
    std::size_t distance = 0;
    std::size_t bound = 0;  ///< r - k + 1
    bool cross_check = true;  ///< column criterion (MDS) or matrix criterion (MRD) agrees
    bool cross_checked = false;
    std::vector<elem> witness;
};

inline CertifyResult certify(const OreRing& A, const LinearCode& C, CodeKind kind) {
    CertifyResult res;
    const auto d = min_distance(A, C, kind == CodeKind::MDS ? Metric::hamming : Metric::rank);
    res.distance = d.distance;
    res.witness = d.witness;
    res.bound = C.length() - C.dim() + 1;
    res.holds = C.dim() > 0 && d.distance == res.bound;
    if (kind == CodeKind::MDS) {
        if (C.dim() > 0) {
            res.cross_checked = true;
            res.cross_check = parity_columns_criterion(C) == res.holds;
        }
    } else if (C.dim() > 0) {
        if (auto g = gabidulin_criterion(A, C)) {
            res.cross_checked = true;
            res.cross_check = *g == res.holds;
        }
    }
    return res;
}

}  // namespace skewalg
