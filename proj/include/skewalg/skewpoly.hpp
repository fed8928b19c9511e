#pragma once

/**
 * @file skewpoly.hpp
 * @brief The Ore extension F[x; sigma, delta] over a finite field.
 *
 * sigma = phi^l (phi the Frobenius map) and delta(z) = w * (sigma(z) - z).
 * Polynomials are dense coefficient vectors, index i holding the coefficient
 * of x^i, trimmed so that the zero polynomial is empty.
 */

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"

namespace skewalg {

using Poly = std::vector<elem>;

struct GcrdResult {
    Poly g;  ///< monic gcrd (empty only when both inputs are zero)
    Poly u;  ///< g = u*a + v*b
    Poly v;
};

struct TwoSidedWitness {
    bool two_sided = false;
    elem c = 0;
    int t = 0;
    Poly h;  ///< central factor, a polynomial in x^s with fixed coefficients
};

struct SimilarityResult {
    bool similar = false;
    bool exhaustive = true;  ///< false when a negative answer comes from random sampling only
    Matrix<elem> B;
};

class OreRing {
public:
    OreRing(std::shared_ptr<const FiniteField> field, long long l, elem w = 0) : F_(std::move(field)) {
        require(F_ != nullptr, "ring needs a field");
        const long long k = F_->k();
        l_ = static_cast<unsigned>(((l % k) + k) % k);
        require(F_->valid(w), "inner derivation element is not a field element");
        w_ = w;
        s_ = static_cast<unsigned>(k / std::gcd(static_cast<long long>(l_), k));
        if (l_ == 0) w_ = 0;  // sigma = id forces delta = 0
    }

    const FiniteField& field() const { return *F_; }
    std::shared_ptr<const FiniteField> field_ptr() const { return F_; }
    unsigned l() const { return l_; }
    elem w() const { return w_; }
    /// Order of sigma.
    unsigned s() const { return s_; }
    bool has_delta() const { return w_ != 0; }

    bool same_ring(const OreRing& o) const {
        return (F_ == o.F_ || (F_->q() == o.F_->q() && F_->k() == o.F_->k())) && l_ == o.l_ && w_ == o.w_;
    }
    /// The same field and sigma with delta = 0.
    OreRing without_delta() const { return OreRing(F_, l_, 0); }

    elem sigma(elem z, long long power = 1) const { return F_->frobenius(z, static_cast<long long>(l_) * power); }
    elem delta(elem z) const {
        if (w_ == 0) return 0;
        return F_->mul(w_, F_->sub(sigma(z), z));
    }

    /// Elements fixed by sigma, sorted by index.
    std::vector<elem> fixed_field() const {
        std::vector<elem> out;
        for (elem z = 0; z < F_->size(); ++z)
            if (sigma(z) == z) out.push_back(z);
        return out;
    }

    // ---- basic polynomial plumbing ----

    static void trim(Poly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    static int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }
    static bool is_zero(const Poly& p) { return p.empty(); }
    static elem lc(const Poly& p) { return p.empty() ? 0 : p.back(); }

    Poly constant(elem c) const {
        Poly p{c};
        trim(p);
        return p;
    }
    Poly one() const { return {1}; }
    Poly monomial(elem c, std::size_t n) const {
        if (c == 0) return {};
        Poly p(n + 1, 0);
        p[n] = c;
        return p;
    }
    Poly x_pow(std::size_t n) const { return monomial(1, n); }
    /// x - z
    Poly linear(elem z) const {
        Poly p{F_->neg(z), 1};
        return p;
    }

    Poly add(const Poly& a, const Poly& b) const {
        Poly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            elem x = i < a.size() ? a[i] : 0;
            elem y = i < b.size() ? b[i] : 0;
            r[i] = F_->add(x, y);
        }
        trim(r);
        return r;
    }
    Poly neg(const Poly& a) const {
        Poly r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = F_->neg(a[i]);
        return r;
    }
    Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

    /// c * p (scalar on the left).
    Poly scale_left(elem c, const Poly& p) const {
        if (c == 0) return {};
        Poly r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = F_->mul(c, p[i]);
        return r;
    }
    /// p * c (scalar on the right).
    Poly scale_right(const Poly& p, elem c) const { return mul(p, constant(c)); }

    /// x * p
    Poly mul_x(const Poly& p) const {
        if (p.empty()) return {};
        Poly r(p.size() + 1, 0);
        for (std::size_t j = 0; j < p.size(); ++j) {
            r[j + 1] = F_->add(r[j + 1], sigma(p[j]));
            if (w_ != 0) r[j] = F_->add(r[j], delta(p[j]));
        }
        trim(r);
        return r;
    }

    Poly mul(const Poly& a, const Poly& b) const {
        if (a.empty() || b.empty()) return {};
        Poly r(a.size() + b.size() - 1, 0);
        Poly xb = b;  // x^i * b
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i > 0) xb = mul_x(xb);
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < xb.size(); ++j) r[j] = F_->add(r[j], F_->mul(a[i], xb[j]));
        }
        trim(r);
        return r;
    }

    Poly pow(const Poly& a, unsigned n) const {
        Poly r = one();
        for (unsigned i = 0; i < n; ++i) r = mul(r, a);
        return r;
    }

    /// Left-monic normalisation: lc(p)^-1 * p.
    Poly monic(const Poly& p) const {
        require(!p.empty(), "zero polynomial has no monic normalisation");
        return scale_left(F_->inv(lc(p)), p);
    }

    // ---- division ----

    /// g = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> right_divmod(const Poly& g, const Poly& d) const {
        require(!d.empty(), "division by the zero polynomial");
        Poly r = g;
        trim(r);
        const int dd = deg(d);
        if (deg(r) < dd) return {{}, r};
        const int top = deg(r) - dd;
        std::vector<Poly> xd(static_cast<std::size_t>(top) + 1);
        xd[0] = d;
        for (int m = 1; m <= top; ++m) xd[m] = mul_x(xd[m - 1]);
        Poly q(static_cast<std::size_t>(top) + 1, 0);
        while (deg(r) >= dd) {
            const int m = deg(r) - dd;
            const elem c = F_->div(lc(r), lc(xd[m]));
            q[m] = c;
            for (std::size_t j = 0; j < xd[m].size(); ++j) r[j] = F_->sub(r[j], F_->mul(c, xd[m][j]));
            trim(r);
        }
        trim(q);
        return {q, r};
    }
    Poly right_rem(const Poly& g, const Poly& d) const { return right_divmod(g, d).second; }
    bool right_divides(const Poly& d, const Poly& g) const { return right_rem(g, d).empty(); }

    /// g = d*q + r with deg r < deg d.
    std::pair<Poly, Poly> left_divmod(const Poly& g, const Poly& d) const {
        require(!d.empty(), "division by the zero polynomial");
        Poly r = g;
        trim(r);
        const int dd = deg(d);
        Poly q;
        while (deg(r) >= dd) {
            const int m = deg(r) - dd;
            // lc(d * c x^m) = lc(d) * sigma^dd(c)
            const elem c = sigma(F_->div(lc(r), lc(d)), -dd);
            Poly term = monomial(c, static_cast<std::size_t>(m));
            r = sub(r, mul(d, term));
            q = add(q, term);
        }
        return {q, r};
    }
    bool left_divides(const Poly& d, const Poly& g) const { return left_divmod(g, d).second.empty(); }

    // ---- evaluation ----

    elem norm(unsigned i, elem z) const {
        elem n = 1;
        for (unsigned j = 0; j < i; ++j) n = F_->add(F_->mul(sigma(n), z), delta(n));
        return n;
    }

    /// g(z) = sum g_i N_i(z), the remainder of right division by x - z.
    elem right_eval(const Poly& g, elem z) const {
        elem acc = 0, n = 1;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i > 0) n = F_->add(F_->mul(sigma(n), z), delta(n));
            acc = F_->add(acc, F_->mul(g[i], n));
        }
        return acc;
    }
    elem right_eval_by_division(const Poly& g, elem z) const {
        Poly r = right_rem(g, linear(z));
        return r.empty() ? 0 : r[0];
    }

    /// The operator D: sigma when delta = 0, delta otherwise.
    elem op_D(elem z) const { return has_delta() ? delta(z) : sigma(z); }
    elem operator_eval(const Poly& g, elem z) const {
        elem acc = 0, d = z;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i > 0) d = op_D(d);
            acc = F_->add(acc, F_->mul(g[i], d));
        }
        return acc;
    }

    // ---- gcrd / lclm ----

    GcrdResult gcrd_ext(const Poly& a, const Poly& b) const {
        require(!(a.empty() && b.empty()), "gcrd of two zero polynomials");
        Poly r0 = a, r1 = b, u0 = one(), u1{}, v0{}, v1 = one();
        trim(r0);
        trim(r1);
        while (!r1.empty()) {
            auto [q, r] = right_divmod(r0, r1);
            Poly u2 = sub(u0, mul(q, u1));
            Poly v2 = sub(v0, mul(q, v1));
            r0 = std::move(r1);
            r1 = std::move(r);
            u0 = std::move(u1);
            u1 = std::move(u2);
            v0 = std::move(v1);
            v1 = std::move(v2);
        }
        const elem inv = F_->inv(lc(r0));
        return {scale_left(inv, r0), scale_left(inv, u0), scale_left(inv, v0)};
    }
    Poly gcrd(const Poly& a, const Poly& b) const { return gcrd_ext(a, b).g; }

    Poly lclm(const Poly& a, const Poly& b) const {
        require(!a.empty() && !b.empty(), "lclm of a zero polynomial");
        Poly r0 = a, r1 = b, u0 = one(), u1{};
        while (!r1.empty()) {
            auto [q, r] = right_divmod(r0, r1);
            Poly u2 = sub(u0, mul(q, u1));
            r0 = std::move(r1);
            r1 = std::move(r);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        // u1 * a + v1 * b = 0 with u1 of minimal degree.
        Poly l = monic(mul(u1, a));
        if (deg(r0) + deg(l) != deg(a) + deg(b))
            throw std::logic_error("degree formula violated in lclm");
        return l;
    }

    // ---- conjugacy ----

    elem conjugate(elem z, elem u) const {
        require(u != 0, "conjugation by zero");
        const elem ui = F_->inv(u);
        return F_->add(F_->mul(F_->mul(sigma(u), z), ui), F_->mul(delta(u), ui));
    }
    std::vector<elem> conjugacy_class(elem z) const {
        std::set<elem> out;
        for (elem u = 1; u < F_->size(); ++u) out.insert(conjugate(z, u));
        return {out.begin(), out.end()};
    }
    std::vector<elem> centralizer(elem z) const {
        std::vector<elem> out{0};
        for (elem u = 1; u < F_->size(); ++u)
            if (conjugate(z, u) == z) out.push_back(u);
        return out;
    }

    // ---- change of variable y = x + w ----

    /// Rewrites p in F[x; sigma, delta] as a polynomial in y = x + w, which satisfies y z = sigma(z) y.
    Poly to_sigma_only(const Poly& p) const {
        if (!has_delta()) return p;
        const OreRing plain = without_delta();
        Poly y_minus_w{F_->neg(w_), 1};
        Poly acc, power = plain.one();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0) power = plain.mul(power, y_minus_w);
            acc = plain.add(acc, plain.scale_left(p[i], power));
        }
        return acc;
    }
    /// Inverse of to_sigma_only.
    Poly from_sigma_only(const Poly& p) const {
        if (!has_delta()) return p;
        Poly x_plus_w{w_, 1};
        Poly acc, power = one();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0) power = mul(power, x_plus_w);
            acc = add(acc, scale_left(p[i], power));
        }
        return acc;
    }

    // ---- two-sided polynomials ----

    /// Decides Ag = gA through the decomposition g = c x^t h with h central.
    TwoSidedWitness two_sided_test(const Poly& g_in) const {
        if (has_delta()) return without_delta().two_sided_test(to_sigma_only(g_in));
        Poly g = g_in;
        trim(g);
        TwoSidedWitness wit;
        if (g.empty()) {
            wit.two_sided = true;
            return wit;
        }
        int t = 0;
        while (g[t] == 0) ++t;
        const elem c = lc(g);
        const elem ci = F_->inv(c);
        Poly h(g.size() - t, 0);
        for (std::size_t j = 0; j < h.size(); ++j) {
            const elem hj = sigma(F_->mul(ci, g[t + j]), -t);
            if (hj != 0 && (sigma(hj) != hj || j % s_ != 0)) return wit;
            h[j] = hj;
        }
        wit.two_sided = true;
        wit.c = c;
        wit.t = t;
        wit.h = h;
        if (mul(scale_left(c, x_pow(t)), h) != g) throw std::logic_error("two-sided witness does not reconstruct");
        return wit;
    }
    bool is_two_sided(const Poly& g) const { return two_sided_test(g).two_sided; }

    /// Ag = gA checked on the ring generators x and z0.
    bool is_two_sided_direct(const Poly& g) const {
        if (g.empty()) return true;
        const Poly x = x_pow(1);
        const Poly z0 = constant(F_->generator());
        for (const Poly& a : {x, z0}) {
            if (!left_divides(g, mul(a, g))) return false;
            if (!right_divides(g, mul(g, a))) return false;
        }
        return true;
    }

    /// Center of A: polynomials in x^s with fixed coefficients.
    bool is_central(const Poly& h) const {
        if (has_delta()) {
            const Poly x = x_pow(1);
            const Poly z0 = constant(F_->generator());
            return mul(x, h) == mul(h, x) && mul(z0, h) == mul(h, z0);
        }
        for (std::size_t j = 0; j < h.size(); ++j)
            if (h[j] != 0 && (sigma(h[j]) != h[j] || j % s_ != 0)) return false;
        return true;
    }

    // ---- annihilators and bounds ----

    /// Monic generator of {h : h a in Af}.
    Poly annihilator_poly(const Poly& a, const Poly& f) const {
        require(!f.empty() && lc(f) == 1 && deg(f) >= 1, "modulus must be monic of degree >= 1");
        const std::size_t n = static_cast<std::size_t>(deg(f));
        auto row_of = [&](const Poly& p) {
            std::vector<elem> v(n, 0);
            Poly r = right_rem(p, f);
            for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i];
            return v;
        };
        Matrix<elem> rows;
        Poly xa = right_rem(a, f);
        for (std::size_t d = 0; d <= n; ++d) {
            if (d > 0) xa = right_rem(mul_x(xa), f);
            auto row = row_of(xa);
            std::vector<elem> neg_row(n);
            for (std::size_t i = 0; i < n; ++i) neg_row[i] = F_->neg(row[i]);
            if (auto sol = solve_left(*F_, rows, neg_row)) {
                Poly h = *sol;
                h.push_back(1);
                return h;
            }
            rows.push_back(row);
        }
        throw std::logic_error("annihilator search exceeded its degree bound");
    }

    /// Greedy basis of F over the fixed field, taken from powers of z0.
    std::vector<elem> basis_over_fixed() const {
        const unsigned dim = s_;
        std::vector<elem> basis{1};
        const FiniteField& F = *F_;
        for (long long e = 1; basis.size() < dim && e < static_cast<long long>(F.order()); ++e) {
            std::vector<elem> cand = basis;
            cand.push_back(F.exp(e));
            // Artin: independent over F^sigma iff the sigma-Moore matrix is nonsingular.
            Matrix<elem> m(cand.size(), std::vector<elem>(cand.size()));
            for (std::size_t i = 0; i < cand.size(); ++i)
                for (std::size_t j = 0; j < cand.size(); ++j) m[i][j] = sigma(cand[j], static_cast<long long>(i));
            if (rank(F, m) == cand.size()) basis = std::move(cand);
        }
        return basis;
    }

    /// Monic generator of the largest two-sided ideal contained in Af.
    Poly bound_polynomial(const Poly& f) const {
        require(!has_delta(), "bound polynomial requires delta = 0");
        require(!f.empty() && lc(f) == 1, "bound polynomial needs a monic f");
        if (deg(f) == 0) return one();
        Poly fstar = f;
        for (elem b : basis_over_fixed())
            for (unsigned i = 0; i < s_; ++i) fstar = lclm(fstar, annihilator_poly(mul(constant(b), x_pow(i)), f));
        if (!right_divides(f, fstar)) throw std::logic_error("f does not right-divide its bound");
        if (!is_two_sided(fstar)) throw std::logic_error("bound polynomial is not two-sided");
        return fstar;
    }

    // ---- similarity ----

    /// Row i is x^(i+1) reduced mod g, in the basis 1, x, ..., x^(m-1).
    Matrix<elem> companion(const Poly& g) const {
        require(!g.empty() && lc(g) == 1 && deg(g) >= 1, "companion matrix needs a monic polynomial of degree >= 1");
        const std::size_t m = static_cast<std::size_t>(deg(g));
        Matrix<elem> c(m, std::vector<elem>(m, 0));
        for (std::size_t i = 0; i + 1 < m; ++i) c[i][i + 1] = 1;
        for (std::size_t j = 0; j < m; ++j) c[m - 1][j] = F_->neg(g[j]);
        return c;
    }

    /// Decides A/Ag ~ A/Ah by solving C_g B = sigma(B) C_h over the prime field.
    SimilarityResult similarity_test(const Poly& g, const Poly& h, std::uint64_t seed = 1) const {
        require(!has_delta(), "similarity test requires delta = 0");
        require(deg(g) == deg(h), "similarity test needs equal degrees");
        const FiniteField& F = *F_;
        const std::size_t m = static_cast<std::size_t>(deg(g));
        const Matrix<elem> Cg = companion(g), Ch = companion(h);
        SimilarityResult res;
        if (g == h) {
            res.similar = true;
            res.B = identity_matrix(F, m);
            return res;
        }
        const unsigned k = F.k(), q = F.q();
        const std::size_t unknowns = m * m * k;
        auto sigma_mat = [&](const Matrix<elem>& B) {
            Matrix<elem> r = B;
            for (auto& row : r)
                for (auto& e : row) e = sigma(e);
            return r;
        };
        auto apply = [&](const Matrix<elem>& B) {
            Matrix<elem> lhs = matmul(F, Cg, B), rhs = matmul(F, sigma_mat(B), Ch);
            std::vector<unsigned> out;
            out.reserve(unknowns);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    for (unsigned c : F.coords(F.sub(lhs[i][j], rhs[i][j]))) out.push_back(c);
            return out;
        };
        auto basis_elem = [&](unsigned c) {
            std::vector<unsigned> v(k, 0);
            v[c] = 1;
            return F.from_coords(v);
        };
        // Columns of the Z_q-linear map, one per unknown coordinate.
        const PrimeField Zq(q);
        Matrix<std::uint32_t> A(unknowns, std::vector<std::uint32_t>(unknowns, 0));
        for (std::size_t idx = 0; idx < unknowns; ++idx) {
            Matrix<elem> B(m, std::vector<elem>(m, 0));
            B[idx / (m * k)][(idx / k) % m] = basis_elem(static_cast<unsigned>(idx % k));
            auto col = apply(B);
            for (std::size_t r = 0; r < unknowns; ++r) A[r][idx] = col[r];
        }
        const Matrix<std::uint32_t> ker = kernel(Zq, A, unknowns);
        if (ker.empty()) {
            res.similar = false;
            return res;
        }
        auto build = [&](const std::vector<unsigned>& coef) {
            std::vector<unsigned> v(unknowns, 0);
            for (std::size_t b = 0; b < ker.size(); ++b)
                for (std::size_t i = 0; i < unknowns; ++i) v[i] = (v[i] + coef[b] * ker[b][i]) % q;
            Matrix<elem> B(m, std::vector<elem>(m, 0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    std::vector<unsigned> c(v.begin() + static_cast<std::ptrdiff_t>((i * m + j) * k),
                                            v.begin() + static_cast<std::ptrdiff_t>((i * m + j + 1) * k));
                    B[i][j] = F.from_coords(c);
                }
            return B;
        };
        double space = 1;
        for (std::size_t i = 0; i < ker.size(); ++i) space *= q;
        if (space <= 65536.0) {
            std::vector<unsigned> coef(ker.size(), 0);
            while (true) {
                std::size_t pos = 0;
                while (pos < coef.size() && ++coef[pos] == q) coef[pos++] = 0;
                if (pos == coef.size()) break;
                Matrix<elem> B = build(coef);
                if (!F.is_zero(determinant(F, B))) {
                    res.similar = true;
                    res.B = std::move(B);
                    return res;
                }
            }
            res.similar = false;
            return res;
        }
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<unsigned> dist(0, q - 1);
        for (int trial = 0; trial < 4096; ++trial) {
            std::vector<unsigned> coef(ker.size());
            for (auto& c : coef) c = dist(rng);
            Matrix<elem> B = build(coef);
            if (!F.is_zero(determinant(F, B))) {
                res.similar = true;
                res.B = std::move(B);
                return res;
            }
        }
        res.similar = false;
        res.exhaustive = false;
        return res;
    }

    // ---- factorization ----

    /// Monic right divisors of degree d of a monic g, in lex order of (c_{d-1}, ..., c_0).
    std::vector<Poly> monic_right_divisors(const Poly& g, int d) const {
        const int n = deg(g);
        require(d >= 0 && d <= n, "divisor degree out of range");
        std::vector<Poly> out;
        if (d <= n - d) {
            for_each_monic(d, [&](const Poly& p) {
                if (right_divides(p, g)) out.push_back(p);
            });
        } else {
            // g = p' * p with p' monic of degree n - d; enumerate the left cofactor instead.
            for_each_monic(n - d, [&](const Poly& lq) {
                auto [p, r] = left_divmod(g, lq);
                if (r.empty()) out.push_back(p);
            });
            std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
                return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
            });
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return out;
    }

    bool is_irreducible(const Poly& g) const {
        require(!g.empty() && deg(g) >= 1, "irreducibility of a unit or zero");
        const Poly m = monic(g);
        for (int d = 1; d < deg(m); ++d)
            if (!monic_right_divisors(m, d).empty()) return false;
        return true;
    }

    /// g = p_1 ... p_t, extracting lex-least minimal-degree monic right divisors from the right.
    std::vector<Poly> factor_irreducible(const Poly& g_in) const {
        Poly g = g_in;
        trim(g);
        require(!g.empty() && deg(g) >= 1, "cannot factor a unit or zero");
        guard(deg(g) <= 6 && F_->size() <= 64, "factorization limited to degree <= 6 and q^k <= 64");
        const elem c = lc(g);
        Poly cur = monic(g);
        std::vector<Poly> rev;
        while (deg(cur) > 0) {
            Poly d;
            for (int e = 1; e <= deg(cur); ++e) {
                auto divs = (e == deg(cur)) ? std::vector<Poly>{cur} : first_monic_right_divisor(cur, e);
                if (!divs.empty()) {
                    d = divs.front();
                    break;
                }
            }
            rev.push_back(d);
            cur = right_divmod(cur, d).first;
        }
        std::vector<Poly> out(rev.rbegin(), rev.rend());
        out.front() = scale_left(c, out.front());
        return out;
    }

    /// Calls fn on every monic polynomial of degree d, in lex order of (c_{d-1}, ..., c_0).
    template <class Fn>
    void for_each_monic(int d, Fn&& fn) const {
        const elem size = F_->size();
        Poly p(static_cast<std::size_t>(d) + 1, 0);
        p[d] = 1;
        while (true) {
            fn(p);
            int pos = 0;
            while (pos < d && ++p[pos] == size) p[pos++] = 0;
            if (pos == d) break;
        }
    }

    // ---- text I/O ----

    std::string to_string(const Poly& p, const std::string& var = "x") const {
        if (p.empty()) return "0";
        std::string out;
        for (std::size_t i = p.size(); i-- > 0;) {
            if (p[i] == 0) continue;
            if (!out.empty()) out += "+";
            const std::string c = F_->to_string(p[i]);
            if (i == 0) {
                out += c;
                continue;
            }
            if (p[i] != 1) out += c + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

    /// Parses e.g. "w^2*x^3 + x + 1"; coefficients use the field grammar.
    Poly parse(const std::string& text, const std::string& var = "x") const {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw std::invalid_argument("empty polynomial");
        Poly acc;
        std::size_t pos = 0;
        bool negate = false;
        if (s[0] == '+' || s[0] == '-') {
            negate = s[0] == '-';
            pos = 1;
        }
        while (true) {
            std::size_t end = pos;
            while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^')) ++end;
            Poly term = parse_term(s.substr(pos, end - pos), var);
            acc = negate ? sub(acc, term) : add(acc, term);
            if (end >= s.size()) break;
            negate = s[end] == '-';
            pos = end + 1;
        }
        return acc;
    }

    std::vector<std::string> to_json_coeffs(const Poly& p) const {
        std::vector<std::string> out;
        for (elem c : p) out.push_back(F_->to_string(c));
        return out;
    }

private:
    std::shared_ptr<const FiniteField> F_;
    unsigned l_ = 0;
    elem w_ = 0;
    unsigned s_ = 1;

    std::vector<Poly> first_monic_right_divisor(const Poly& g, int d) const {
        const int n = deg(g);
        if (d <= n - d) {
            // Lex order enumeration: the first hit is the answer.
            const elem size = F_->size();
            Poly p(static_cast<std::size_t>(d) + 1, 0);
            p[d] = 1;
            // Most significant coefficient is c_{d-1}; increment from c_0 upward gives lex order.
            while (true) {
                if (right_divides(p, g)) return {p};
                int pos = 0;
                while (pos < d && ++p[pos] == size) p[pos++] = 0;
                if (pos == d) break;
            }
            return {};
        }
        auto all = monic_right_divisors(g, d);
        if (all.empty()) return {};
        return {all.front()};
    }

    Poly parse_term(const std::string& term, const std::string& var) const {
        if (term.empty()) throw std::invalid_argument("malformed polynomial term");
        elem coeff = 1;
        std::size_t power = 0;
        std::size_t pos = 0;
        while (true) {
            std::size_t end = term.find('*', pos);
            const std::string f = term.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            if (f == var) {
                power += 1;
            } else if (f.rfind(var + "^", 0) == 0) {
                const std::string ex = f.substr(var.size() + 1);
                if (ex.empty() || !std::all_of(ex.begin(), ex.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                    throw std::invalid_argument("malformed exponent in '" + f + "'");
                power += std::stoul(ex);
            } else {
                coeff = F_->mul(coeff, F_->parse(f));
            }
            if (end == std::string::npos) break;
            pos = end + 1;
        }
        // Coefficients are written on the left of x, so c*x^n is the monomial c x^n.
        return monomial(coeff, power);
    }
};

}  // namespace skewalg
