#pragma once

/**
 * @file codes.hpp
 * @brief Linear codes, skew cyclic codes A g / A f, the Theta anti-isomorphism and idempotents.
 */

#include <cmath>
#include <memory>
#include <optional>
#include <vector>

#include "skewpoly.hpp"

namespace skewalg {

/// A linear code of length n given by a full-rank generator matrix (kept in RREF).
class LinearCode {
public:
    LinearCode(std::shared_ptr<const FiniteField> F, std::size_t n, Matrix<elem> G) : F_(std::move(F)), n_(n) {
        for (const auto& row : G) require(row.size() == n, "generator row has the wrong length");
        G_ = rref(*F_, std::move(G));
    }

    const FiniteField& field() const { return *F_; }
    std::shared_ptr<const FiniteField> field_ptr() const { return F_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return G_.size(); }
    const Matrix<elem>& generator() const { return G_; }

    /// Generator matrix of the dual; it is a parity-check matrix of this code.
    LinearCode dual() const { return LinearCode(F_, n_, kernel(*F_, G_, n_)); }
    Matrix<elem> parity_check() const { return kernel(*F_, G_, n_); }

    bool contains(const std::vector<elem>& v) const {
        require(v.size() == n_, "word length does not match the code");
        for (const auto& h : parity_check()) {
            elem acc = 0;
            for (std::size_t i = 0; i < n_; ++i) acc = F_->add(acc, F_->mul(h[i], v[i]));
            if (acc != 0) return false;
        }
        return true;
    }

    /// The codeword m * G.
    std::vector<elem> encode(const std::vector<elem>& m) const { return vecmul(*F_, m, G_, n_); }

    bool operator==(const LinearCode& o) const { return n_ == o.n_ && G_ == o.G_; }

private:
    std::shared_ptr<const FiniteField> F_;
    std::size_t n_;
    Matrix<elem> G_;
};

/// p_f(v) = sum v_i x^i.
inline Poly word_map([[maybe_unused]] const OreRing& A, const std::vector<elem>& v, const Poly& f) {
    require(v.size() == static_cast<std::size_t>(OreRing::deg(f)), "word length must equal deg f");
    Poly p = v;
    OreRing::trim(p);
    return p;
}

/// Coefficients of p reduced mod f (right remainder), padded to length deg f.
inline std::vector<elem> word_unmap(const OreRing& A, const Poly& p, const Poly& f) {
    const std::size_t n = static_cast<std::size_t>(OreRing::deg(f));
    Poly r = A.right_rem(p, f);
    std::vector<elem> v(n, 0);
    std::copy(r.begin(), r.end(), v.begin());
    return v;
}

/// The code A g / A f for a monic right divisor g of the monic modulus f.
class SkewCyclicCode {
public:
    SkewCyclicCode(OreRing A, Poly f, Poly g) : A_(std::move(A)), f_(std::move(f)), g_(std::move(g)) {
        OreRing::trim(f_);
        OreRing::trim(g_);
        require(!f_.empty() && OreRing::lc(f_) == 1 && OreRing::deg(f_) >= 1, "modulus must be monic of degree >= 1");
        require(!g_.empty() && OreRing::lc(g_) == 1, "divisor must be monic");
        require(A_.right_divides(g_, f_), "g does not right-divide f");
    }

    const OreRing& ring() const { return A_; }
    const Poly& modulus() const { return f_; }
    const Poly& divisor() const { return g_; }
    std::size_t length() const { return static_cast<std::size_t>(OreRing::deg(f_)); }
    std::size_t dim() const { return length() - static_cast<std::size_t>(OreRing::deg(g_)); }

    /// Rows: x^i g mod f, i < dim.
    Matrix<elem> generator_matrix() const {
        Matrix<elem> G;
        Poly xg = g_;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i > 0) xg = A_.mul_x(xg);
            G.push_back(word_unmap(A_, xg, f_));
        }
        return G;
    }
    LinearCode linear_code() const { return LinearCode(A_.field_ptr(), length(), generator_matrix()); }

    /// Every element of A g / A f, as reduced polynomials. Guarded by |F|^dim <= 2^20.
    template <class Fn>
    void for_each_element(Fn&& fn) const {
        const double count = std::pow(static_cast<double>(A_.field().size()), static_cast<double>(dim()));
        guard(count <= 1048576.0, "code enumeration exceeds 2^20 elements");
        const Matrix<elem> G = generator_matrix();
        const elem size = A_.field().size();
        std::vector<elem> m(dim(), 0);
        while (true) {
            Poly p = vecmul(A_.field(), m, G, length());
            OreRing::trim(p);
            fn(p);
            std::size_t pos = 0;
            while (pos < m.size() && ++m[pos] == size) m[pos++] = 0;
            if (pos == m.size()) break;
        }
    }

private:
    OreRing A_;
    Poly f_, g_;
};

/// x^n - 1
inline Poly xn_minus_one(const OreRing& A, std::size_t n) {
    Poly f = A.x_pow(n);
    f[0] = A.field().sub(f[0], 1);
    return f;
}

inline void require_cyclic_setting(const OreRing& A, std::size_t n) {
    require(!A.has_delta(), "this construction requires delta = 0");
    require(A.s() == n, "this construction requires the order of sigma to equal n");
}

/// Matrix of right multiplication by g on A / A(x^n - 1); row i = x^i g mod (x^n - 1).
inline Matrix<elem> right_mult_matrix(const OreRing& A, const Poly& g, std::size_t n) {
    require_cyclic_setting(A, n);
    const Poly f = xn_minus_one(A, n);
    Matrix<elem> M;
    Poly xg = A.right_rem(g, f);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) xg = A.right_rem(A.mul_x(xg), f);
        M.push_back(word_unmap(A, xg, f));
    }
    return M;
}

/// Theta(g) = sum sigma^(n-i)(g_i) x^(n-i), reduced mod x^n - 1.
inline Poly theta(const OreRing& A, const Poly& g, std::size_t n) {
    require_cyclic_setting(A, n);
    const Poly r = A.right_rem(g, xn_minus_one(A, n));
    Poly out(n, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::size_t e = (n - i) % n;
        out[e] = A.field().add(out[e], A.sigma(r[i], static_cast<long long>(n - i)));
    }
    OreRing::trim(out);
    return out;
}

inline bool is_idempotent_mod(const OreRing& A, const Poly& e, const Poly& f) {
    const Poly r = A.right_rem(e, f);
    return A.right_rem(A.mul(r, r), f) == r;
}

/// Lowest (in message enumeration order) idempotent e in the code with A e + A f = A g.
inline Poly generating_idempotent(const SkewCyclicCode& C) {
    const OreRing& A = C.ring();
    std::optional<Poly> found;
    C.for_each_element([&](const Poly& e) {
        if (found || e.empty()) return;
        if (is_idempotent_mod(A, e, C.modulus()) && A.gcrd(e, C.modulus()) == C.divisor()) found = e;
    });
    if (!found) {
        if (C.dim() == 0) return {};
        throw std::domain_error("code has no generating idempotent");
    }
    return *found;
}

/// gcrd(e, x^n - 1) for an idempotent e.
inline Poly idempotent_to_generator(const OreRing& A, const Poly& e, std::size_t n) {
    const Poly f = xn_minus_one(A, n);
    require(is_idempotent_mod(A, e, f), "e is not idempotent modulo x^n - 1");
    return A.gcrd(A.right_rem(e, f), f);
}

/// e = u g from 1 = u g + v h, for complementary divisors g, h of x^n - 1.
inline Poly bezout_idempotent(const OreRing& A, const Poly& g, const Poly& h, std::size_t n) {
    const Poly f = xn_minus_one(A, n);
    require(OreRing::deg(g) + OreRing::deg(h) == static_cast<int>(n), "deg g + deg h must equal n");
    require(A.lclm(g, h) == f, "lclm(g, h) must equal x^n - 1");
    const GcrdResult b = A.gcrd_ext(g, h);
    require(b.g == A.one(), "gcrd(g, h) must be 1");
    const Poly e = A.right_rem(A.mul(b.u, g), f);
    if (!is_idempotent_mod(A, e, f)) throw std::logic_error("Bezout element is not idempotent");
    return e;
}

/// The dual of a code modulo x^n - 1 as the skew cyclic code A Theta(1 - e) / A f.
inline SkewCyclicCode dual_skew_cyclic(const SkewCyclicCode& C) {
    const OreRing& A = C.ring();
    const std::size_t n = C.length();
    require_cyclic_setting(A, n);
    require(C.modulus() == xn_minus_one(A, n), "dual construction requires f = x^n - 1");
    const Poly e = generating_idempotent(C);
    const Poly t = theta(A, A.sub(A.one(), e), n);
    const Poly g = A.gcrd(t, C.modulus());
    SkewCyclicCode D(A, C.modulus(), g);
    if (!(D.linear_code() == C.linear_code().dual())) throw std::logic_error("Theta dual disagrees with the kernel dual");
    return D;
}

}  // namespace skewalg
