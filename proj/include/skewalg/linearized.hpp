#pragma once

/**
 * @file linearized.hpp
 * @brief q-linearized polynomials sum g_i y^(q^i), Moore and Dickson matrices.
 *
 * Matrix convention for the evaluation map: column j of M_g holds the Z_q
 * coordinates of g(x_j) in the basis X. With it, D_g M(X) = M(X) M_g and
 * M_{g o h} = M_g M_h.
 */

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "codes.hpp"
#include "skewpoly.hpp"

namespace skewalg {

/// Coefficients g_i of y^(q^i).
using LinearizedPoly = std::vector<elem>;

inline void require_frobenius_ring(const OreRing& A) {
    require(A.l() == 1 % A.field().k() && !A.has_delta(), "linearized correspondence requires sigma = Frobenius and delta = 0");
}

inline LinearizedPoly to_linearized(const OreRing& A, const Poly& g) {
    require_frobenius_ring(A);
    return g;
}
inline Poly from_linearized(const OreRing& A, const LinearizedPoly& L) {
    require_frobenius_ring(A);
    Poly p = L;
    OreRing::trim(p);
    return p;
}

/// (a o b)(y) = a(b(y)).
inline LinearizedPoly compose(const FiniteField& F, const LinearizedPoly& a, const LinearizedPoly& b) {
    if (a.empty() || b.empty()) return {};
    LinearizedPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], F.frobenius(b[j], static_cast<long long>(i))));
    OreRing::trim(r);
    return r;
}

inline elem evaluate(const FiniteField& F, const LinearizedPoly& g, elem z) {
    elem acc = 0;
    for (std::size_t i = 0; i < g.size(); ++i) acc = F.add(acc, F.mul(g[i], F.frobenius(z, static_cast<long long>(i))));
    return acc;
}

/// Canonical Z_q-basis 1, a, ..., a^(k-1).
inline std::vector<elem> canonical_basis(const FiniteField& F) {
    std::vector<elem> X;
    for (unsigned i = 0; i < F.k(); ++i) {
        std::vector<unsigned> c(F.k(), 0);
        c[i] = 1;
        X.push_back(F.from_coords(c));
    }
    return X;
}

/// Rank over Z_q of the coordinate vectors of X.
inline std::size_t prime_rank(const FiniteField& F, const std::vector<elem>& X) {
    const PrimeField Zq(F.q());
    Matrix<std::uint32_t> m;
    for (elem z : X) {
        auto c = F.coords(z);
        m.emplace_back(c.begin(), c.end());
    }
    return rank(Zq, m);
}

/// Rows z_j^(q^i), i < |X|, without checking X.
inline Matrix<elem> moore_matrix_unchecked(const FiniteField& F, const std::vector<elem>& X) {
    Matrix<elem> M(X.size(), std::vector<elem>(X.size()));
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j) M[i][j] = F.frobenius(X[j], static_cast<long long>(i));
    return M;
}

inline Matrix<elem> moore_matrix(const FiniteField& F, const std::vector<elem>& X) {
    require(X.size() == F.k() && prime_rank(F, X) == F.k(), "Moore matrix needs a basis of F over Z_q");
    return moore_matrix_unchecked(F, X);
}

/// Coefficients folded modulo y^(q^k) - y.
inline LinearizedPoly fold(const FiniteField& F, const LinearizedPoly& g) {
    LinearizedPoly r(F.k(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) r[i % F.k()] = F.add(r[i % F.k()], g[i]);
    return r;
}

/// q-circulant matrix D[i][l] = g_{(l - i) mod k}^(q^i).
inline Matrix<elem> dickson_matrix(const FiniteField& F, const LinearizedPoly& g) {
    const std::size_t k = F.k();
    const LinearizedPoly h = fold(F, g);
    Matrix<elem> D(k, std::vector<elem>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) D[i][l] = F.frobenius(h[(l + k - i) % k], static_cast<long long>(i));
    return D;
}

/// Z_q-coordinates of z in the basis X.
inline std::vector<std::uint32_t> prime_coords(const FiniteField& F, const std::vector<elem>& X, elem z) {
    const PrimeField Zq(F.q());
    Matrix<std::uint32_t> B;
    for (elem x : X) {
        auto c = F.coords(x);
        B.emplace_back(c.begin(), c.end());
    }
    auto zc = F.coords(z);
    auto sol = solve_left(Zq, B, std::vector<std::uint32_t>(zc.begin(), zc.end()));
    require(sol.has_value(), "element is not in the span of the basis");
    return *sol;
}

/// Matrix over Z_q of z -> g(z) in the basis X; column j = coordinates of g(x_j).
inline Matrix<std::uint32_t> evaluation_matrix(const FiniteField& F, const LinearizedPoly& g, const std::vector<elem>& X) {
    const std::size_t k = X.size();
    Matrix<std::uint32_t> M(k, std::vector<std::uint32_t>(k));
    for (std::size_t j = 0; j < k; ++j) {
        auto c = prime_coords(F, X, evaluate(F, g, X[j]));
        for (std::size_t i = 0; i < k; ++i) M[i][j] = c[i];
    }
    return M;
}

/// Embeds a Z_q matrix into F.
inline Matrix<elem> lift(const FiniteField& F, const Matrix<std::uint32_t>& m) {
    Matrix<elem> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto v : m[i]) out[i].push_back(F.from_int(v));
    return out;
}

/// D_g M(X) == M(X) M_g.
inline bool dickson_identity_holds(const FiniteField& F, const LinearizedPoly& g, const std::vector<elem>& X) {
    const Matrix<elem> MX = moore_matrix(F, X);
    return matrix_equal(F, matmul(F, dickson_matrix(F, g), MX), matmul(F, MX, lift(F, evaluation_matrix(F, g, X))));
}

struct MatrixAlgebraReport {
    unsigned q = 0, k = 0;
    std::size_t elements = 0;         ///< |A / <x^k - 1>| = q^(k^2)
    std::size_t distinct_images = 0;  ///< injective and onto when this equals q^(k^2)
    std::size_t pairs_checked = 0;
    bool exhaustive_pairs = false;
    bool additive = true;
    bool multiplicative = true;
    bool xk_to_identity = false;
    bool isomorphism() const {
        return additive && multiplicative && distinct_images == elements && xk_to_identity;
    }
};

/// Checks that g mod (x^k - 1) -> M_g is a ring isomorphism onto M_k(Z_q).
inline MatrixAlgebraReport matrix_algebra_check(unsigned q, unsigned k, std::uint64_t seed = 1) {
    auto Fp = std::make_shared<FiniteField>(q, k);
    const FiniteField& F = *Fp;
    guard(F.size() <= 64, "matrix algebra check limited to q^k <= 64");
    const OreRing A(Fp, 1);
    const Poly f = xn_minus_one(A, k);
    const std::vector<elem> X = canonical_basis(F);
    const PrimeField Zq(q);

    MatrixAlgebraReport rep;
    rep.q = q;
    rep.k = k;
    rep.elements = static_cast<std::size_t>(std::pow(static_cast<double>(F.size()), static_cast<double>(k)));

    std::vector<Poly> all;
    std::vector<Matrix<std::uint32_t>> images;
    std::set<Matrix<std::uint32_t>> distinct;
    std::vector<elem> c(k, 0);
    while (true) {
        Poly g = c;
        OreRing::trim(g);
        all.push_back(g);
        images.push_back(evaluation_matrix(F, g, X));
        distinct.insert(images.back());
        std::size_t pos = 0;
        while (pos < k && ++c[pos] == F.size()) c[pos++] = 0;
        if (pos == k) break;
    }
    rep.distinct_images = distinct.size();
    rep.xk_to_identity = evaluation_matrix(F, A.right_rem(A.x_pow(k), f), X) == identity_matrix(Zq, k);

    auto index_of = [&](const Poly& p) {
        std::size_t idx = 0, mult = 1;
        for (std::size_t i = 0; i < k; ++i) {
            idx += (i < p.size() ? p[i] : 0) * mult;
            mult *= F.size();
        }
        return idx;
    };
    auto check_pair = [&](std::size_t a, std::size_t b) {
        const Poly sum = A.add(all[a], all[b]);
        const Poly prod = A.right_rem(A.mul(all[a], all[b]), f);
        Matrix<std::uint32_t> msum = images[a];
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) msum[i][j] = Zq.add(msum[i][j], images[b][i][j]);
        if (images[index_of(sum)] != msum) rep.additive = false;
        if (images[index_of(prod)] != matmul(Zq, images[a], images[b])) rep.multiplicative = false;
        ++rep.pairs_checked;
    };
    const std::size_t N = all.size();
    if (N * N <= 65536) {
        rep.exhaustive_pairs = true;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) check_pair(a, b);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> dist(0, N - 1);
        for (int t = 0; t < 20000; ++t) check_pair(dist(rng), dist(rng));
    }
    return rep;
}

}  // namespace skewalg
