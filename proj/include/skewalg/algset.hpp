#pragma once

/**
 * @file algset.hpp
 * @brief Right vanishing sets, minimal polynomials and Vandermonde/Wronskian matrices.
 *
 * Point sets are sorted vectors of field elements (index order).
 */

#include <algorithm>
#include <vector>

#include "skewpoly.hpp"

namespace skewalg {

using PointSet = std::vector<elem>;

inline PointSet normalize_points(PointSet X) {
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    return X;
}

/// V(g) = {z : g(z) = 0}.
inline PointSet vanishing_set(const OreRing& A, const Poly& g) {
    PointSet out;
    for (elem z = 0; z < A.field().size(); ++z)
        if (A.right_eval(g, z) == 0) out.push_back(z);
    return out;
}

/// m_X = lclm(x - z : z in X), folded in sorted order; m_{} = 1.
inline Poly minimal_polynomial(const OreRing& A, const PointSet& X_in) {
    const PointSet X = normalize_points(X_in);
    Poly m = A.one();
    for (elem z : X) m = A.lclm(m, A.linear(z));
    return m;
}

/// V_r(Z): row i holds N_i(z_j).
inline Matrix<elem> vandermonde(const OreRing& A, const std::vector<elem>& Z, std::size_t rows) {
    Matrix<elem> V(rows, std::vector<elem>(Z.size()));
    for (std::size_t j = 0; j < Z.size(); ++j) {
        elem n = 1;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i > 0) n = A.field().add(A.field().mul(A.sigma(n), Z[j]), A.delta(n));
            V[i][j] = n;
        }
    }
    return V;
}
inline Matrix<elem> vandermonde(const OreRing& A, const std::vector<elem>& Z) { return vandermonde(A, Z, Z.size()); }

/// Wr_r(Z): row i holds D^i(z_j), D = sigma or delta.
inline Matrix<elem> wronskian(const OreRing& A, const std::vector<elem>& Z, std::size_t rows) {
    Matrix<elem> W(rows, std::vector<elem>(Z.size()));
    for (std::size_t j = 0; j < Z.size(); ++j) {
        elem d = Z[j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i > 0) d = A.op_D(d);
            W[i][j] = d;
        }
    }
    return W;
}
inline Matrix<elem> wronskian(const OreRing& A, const std::vector<elem>& Z) { return wronskian(A, Z, Z.size()); }

/// deg m_X, checked against the Vandermonde rank.
inline int rank_of_set(const OreRing& A, const PointSet& X_in) {
    const PointSet X = normalize_points(X_in);
    const int r = OreRing::deg(minimal_polynomial(A, X));
    if (!X.empty() && static_cast<int>(rank(A.field(), vandermonde(A, X))) != r)
        throw std::logic_error("set rank disagrees with Vandermonde rank");
    return r;
}

/// True iff g is the minimal polynomial of its own root set.
inline bool is_W_polynomial(const OreRing& A, const Poly& g) {
    require(!g.empty() && OreRing::lc(g) == 1 && OreRing::deg(g) >= 1, "W-polynomial test needs a monic polynomial of degree >= 1");
    return minimal_polynomial(A, vanishing_set(A, g)) == g;
}

/// Monic generator of the left ideal I(X) = {g : X in V(g)}.
inline Poly ideal_of_points(const OreRing& A, const PointSet& X) { return minimal_polynomial(A, X); }

}  // namespace skewalg
