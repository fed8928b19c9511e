#pragma once

/**
 * @file spbw.hpp
 * @brief Skew PBW extensions over a field: normal-form arithmetic, deglex division and left Groebner bases.
 *
 * Presentation (variables 0-based, i < j):
 *   x_j x_i = c_ij x_i x_j + sum_k a_ij^(k) x_k + d_ij
 *   x_i r   = sigma_i(r) x_i + delta_i(r),  sigma_i = tau^(p_i),  delta_i(r) = w_i (sigma_i(r) - r)
 * where tau is the base automorphism of the coefficient field K.
 *
 * Polynomials are maps from exponent vectors to coefficients, iterated in
 * decreasing deglex order (x_1 > x_2 > ... > x_n), so begin() is the leading term.
 * Coefficients always sit on the left of standard monomials.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "parse.hpp"

namespace skewalg {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0u); }

/// Strict deglex "greater than": total degree first, then lexicographic with x_1 most significant.
struct DeglexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline bool monomial_divides(const Exponent& d, const Exponent& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

template <class K>
class PBWRing {
public:
    using V = typename K::value_type;
    using Poly = std::map<Exponent, V, DeglexGreater>;

    struct Relation {
        V c;
        std::vector<V> a;
        V d;
    };

    struct DivisionResult {
        std::vector<Poly> quotients;
        Poly remainder;
    };

    struct GroebnerResult {
        std::vector<Poly> basis;
        bool complete = true;
    };

    struct RightDivision {
        Poly quotient;
        Poly remainder;
    };

    /// Commutative polynomial ring over K in the given variables; adjust with the setters.
    PBWRing(K field, std::vector<std::string> vars) : K_(std::move(field)), vars_(std::move(vars)) {
        const std::size_t n = vars_.size();
        require(n >= 1, "presentation needs at least one variable");
        sigma_power_.assign(n, 0);
        delta_w_.assign(n, K_.zero());
        rel_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) rel_[j * n + i] = {K_.one(), std::vector<V>(n, K_.zero()), K_.zero()};
    }

    const K& field() const { return K_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }

    /// x_j x_i = c x_i x_j + sum a_k x_k + d, i < j.
    void set_relation(std::size_t j, std::size_t i, V c, std::vector<V> a, V d) {
        const std::size_t n = nvars();
        require(i < j && j < n, "relation indices must satisfy i < j < n");
        require(!K_.is_zero(c), "relation coefficient c_ij must be invertible");
        if (a.empty()) a.assign(n, K_.zero());
        require(a.size() == n, "linear part of a relation must have one entry per variable");
        rel_[j * n + i] = {std::move(c), std::move(a), std::move(d)};
        cache_.clear();
    }
    void set_sigma(std::size_t i, long long power) {
        require(i < nvars(), "variable index out of range");
        sigma_power_[i] = power;
        cache_.clear();
    }
    void set_delta(std::size_t i, V w) {
        require(i < nvars(), "variable index out of range");
        delta_w_[i] = std::move(w);
        cache_.clear();
    }

    const Relation& relation(std::size_t j, std::size_t i) const { return rel_[j * nvars() + i]; }
    long long sigma_power(std::size_t i) const { return sigma_power_[i]; }
    const V& delta_element(std::size_t i) const { return delta_w_[i]; }

    V sigma(std::size_t i, const V& r) const { return K_.automorphism(r, sigma_power_[i]); }
    V delta(std::size_t i, const V& r) const {
        if (K_.is_zero(delta_w_[i])) return K_.zero();
        return K_.mul(delta_w_[i], K_.sub(sigma(i, r), r));
    }
    /// sigma^alpha (all sigma_i are powers of one automorphism, so they commute).
    V sigma_exp(const Exponent& alpha, const V& r, int sign = 1) const {
        long long p = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) p += static_cast<long long>(alpha[i]) * sigma_power_[i];
        return K_.automorphism(r, sign * p);
    }

    bool delta_is_zero(std::size_t i) const {
        if (K_.is_zero(delta_w_[i])) return true;
        // delta = 0 iff sigma_i is the identity on K.
        return K_.equal(sigma(i, K_.generator()), K_.generator());
    }

    /// All delta_i = 0 and every relation is x_j x_i = c_ij x_i x_j.
    bool is_quasi_commutative() const {
        const std::size_t n = nvars();
        for (std::size_t i = 0; i < n; ++i)
            if (!delta_is_zero(i)) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Relation& r = relation(j, i);
                if (!K_.is_zero(r.d)) return false;
                for (const V& a : r.a)
                    if (!K_.is_zero(a)) return false;
            }
        return true;
    }
    /// Automorphisms are bijective and every c_ij is nonzero by construction.
    bool is_bijective() const { return true; }

    // ---- construction ----

    Exponent zero_exp() const { return Exponent(nvars(), 0); }
    Exponent unit_exp(std::size_t i) const {
        Exponent e = zero_exp();
        e[i] = 1;
        return e;
    }
    Poly zero() const { return {}; }
    Poly constant(const V& c) const {
        Poly p;
        if (!K_.is_zero(c)) p.emplace(zero_exp(), c);
        return p;
    }
    Poly one() const { return constant(K_.one()); }
    Poly var(std::size_t i) const { return monomial(K_.one(), unit_exp(i)); }
    Poly monomial(const V& c, const Exponent& e) const {
        Poly p;
        if (!K_.is_zero(c)) p.emplace(e, c);
        return p;
    }

    // ---- leading data ----

    static bool is_zero(const Poly& p) { return p.empty(); }
    const Exponent& lm(const Poly& p) const {
        require(!p.empty(), "leading monomial of zero");
        return p.begin()->first;
    }
    const V& lc(const Poly& p) const {
        require(!p.empty(), "leading coefficient of zero");
        return p.begin()->second;
    }
    Poly lt(const Poly& p) const { return monomial(lc(p), lm(p)); }
    V coeff(const Poly& p, const Exponent& e) const {
        auto it = p.find(e);
        return it == p.end() ? K_.zero() : it->second;
    }
    int degree(const Poly& p) const {
        int d = -1;
        for (const auto& [e, c] : p) d = std::max(d, static_cast<int>(total_degree(e)));
        return d;
    }

    // ---- linear operations ----

    void add_term(Poly& p, const Exponent& e, const V& c) const {
        if (K_.is_zero(c)) return;
        auto it = p.find(e);
        if (it == p.end()) {
            p.emplace(e, c);
            return;
        }
        it->second = K_.add(it->second, c);
        if (K_.is_zero(it->second)) p.erase(it);
    }
    Poly add(Poly a, const Poly& b) const {
        for (const auto& [e, c] : b) add_term(a, e, c);
        return a;
    }
    Poly neg(Poly a) const {
        for (auto& [e, c] : a) c = K_.neg(c);
        return a;
    }
    Poly sub(Poly a, const Poly& b) const {
        for (const auto& [e, c] : b) add_term(a, e, K_.neg(c));
        return a;
    }
    /// c * p
    Poly scale_left(const V& c, const Poly& p) const {
        if (K_.is_zero(c)) return {};
        Poly r;
        for (const auto& [e, v] : p) r.emplace(e, K_.mul(c, v));
        return r;
    }

    // ---- multiplication ----

    /// x_i * x^beta in normal form.
    const Poly& mul_var_mono(std::size_t i, const Exponent& beta) const {
        auto key = std::make_pair(i, beta);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        Poly result;
        std::size_t j = 0;
        while (j < beta.size() && beta[j] == 0) ++j;
        if (j >= beta.size() || i <= j) {
            Exponent e = beta;
            ++e[i];
            result.emplace(std::move(e), K_.one());
        } else {
            // x_i x_j = c x_j x_i + sum a_k x_k + d, and x^beta = x_j x^beta'.
            Exponent rest = beta;
            --rest[j];
            const Relation& r = relation(i, j);
            result = scale_left(r.c, mul_var(j, mul_var_mono(i, rest)));
            for (std::size_t k = 0; k < nvars(); ++k)
                if (!K_.is_zero(r.a[k])) result = add(result, scale_left(r.a[k], mul_var_mono(k, rest)));
            add_term(result, rest, r.d);
        }
        return cache_.emplace(std::move(key), std::move(result)).first->second;
    }

    /// x_i * p
    Poly mul_var(std::size_t i, const Poly& p) const {
        Poly r;
        for (const auto& [e, c] : p) {
            const V s = sigma(i, c);
            if (!K_.is_zero(s))
                for (const auto& [e2, c2] : mul_var_mono(i, e)) add_term(r, e2, K_.mul(s, c2));
            add_term(r, e, delta(i, c));
        }
        return r;
    }

    /// x^alpha * p, applying variables from the right.
    Poly mul_mono_left(const Exponent& alpha, Poly p) const {
        for (std::size_t v = nvars(); v-- > 0;)
            for (unsigned t = 0; t < alpha[v]; ++t) p = mul_var(v, p);
        return p;
    }

    Poly mul(const Poly& a, const Poly& b) const {
        Poly r;
        for (const auto& [e, c] : a) r = add(r, scale_left(c, mul_mono_left(e, b)));
        return r;
    }

    Poly pow(const Poly& a, unsigned n) const {
        Poly r = one();
        for (unsigned i = 0; i < n; ++i) r = mul(r, a);
        return r;
    }

    // ---- division ----

    /// f = sum q_i f_i + h with h reduced (no term divisible by any lm(f_i)).
    DivisionResult divide(const Poly& f, const std::vector<Poly>& F) const {
        for (const auto& g : F) require(!g.empty(), "division by the zero polynomial");
        require(!F.empty(), "empty divisor list");
        DivisionResult res;
        res.quotients.assign(F.size(), {});
        Poly p = f;
        while (!p.empty()) {
            const Exponent gamma = lm(p);
            const V c = lc(p);
            bool reduced = false;
            for (std::size_t i = 0; i < F.size(); ++i) {
                if (!monomial_divides(lm(F[i]), gamma)) continue;
                Exponent alpha(gamma);
                for (std::size_t v = 0; v < alpha.size(); ++v) alpha[v] -= lm(F[i])[v];
                const Poly m = mul_mono_left(alpha, F[i]);
                const V r = K_.mul(c, K_.inv(coeff(m, gamma)));
                add_term(res.quotients[i], alpha, r);
                p = sub(p, scale_left(r, m));
                reduced = true;
                break;
            }
            if (!reduced) {
                add_term(res.remainder, gamma, c);
                p.erase(p.begin());
            }
        }
        check_division(f, F, res, true);
        return res;
    }

    /// Reduces only the leading term of f; the other terms of f pass to the remainder unchanged.
    DivisionResult divide_leading(const Poly& f, const std::vector<Poly>& F) const {
        if (f.empty()) {
            DivisionResult res;
            res.quotients.assign(F.size(), {});
            return res;
        }
        DivisionResult res = divide(lt(f), F);
        Poly tail = f;
        tail.erase(tail.begin());
        res.remainder = add(res.remainder, tail);
        check_division(f, F, res, false);
        return res;
    }

    Poly reduce(const Poly& f, const std::vector<Poly>& G) const {
        if (G.empty()) return f;
        return divide(f, G).remainder;
    }

    // ---- Groebner bases ----

    Poly make_monic(const Poly& p) const { return scale_left(K_.inv(lc(p)), p); }

    GroebnerResult groebner_left(const std::vector<Poly>& gens, std::size_t max_basis = 64) const {
        GroebnerResult out;
        std::vector<Poly> G;
        for (const auto& g : gens) {
            Poly r = reduce(g, G);
            if (!r.empty()) G.push_back(make_monic(r));
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < G.size(); ++i)
            for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
        while (!pairs.empty()) {
            auto [i, j] = pairs.back();
            pairs.pop_back();
            Poly r = reduce(s_poly(G[i], G[j]), G);
            if (r.empty()) continue;
            if (G.size() >= max_basis) {
                out.complete = false;
                break;
            }
            G.push_back(make_monic(r));
            for (std::size_t a = 0; a + 1 < G.size(); ++a) pairs.emplace_back(a, G.size() - 1);
        }
        out.basis = interreduce(G);
        return out;
    }

    /// Left Groebner basis of the two-sided ideal generated by gens (quasi-commutative only).
    GroebnerResult two_sided_closure(const std::vector<Poly>& gens, std::size_t max_rounds = 32) const {
        require(is_quasi_commutative(), "two-sided closure is only available for quasi-commutative presentations");
        GroebnerResult G = groebner_left(gens);
        std::vector<Poly> multipliers;
        for (std::size_t i = 0; i < nvars(); ++i) multipliers.push_back(var(i));
        multipliers.push_back(constant(K_.generator()));
        for (std::size_t round = 0; round < max_rounds && G.complete; ++round) {
            std::vector<Poly> extra;
            for (const auto& g : G.basis)
                for (const auto& m : multipliers) {
                    Poly r = reduce(mul(g, m), G.basis);
                    if (!r.empty()) extra.push_back(r);
                }
            if (extra.empty()) return G;
            extra.insert(extra.begin(), G.basis.begin(), G.basis.end());
            G = groebner_left(extra);
        }
        G.complete = false;
        return G;
    }

    /// p = f q + r, solving the leading coefficient through sigma^(-lm f).
    RightDivision right_divide(const Poly& p_in, const Poly& f) const {
        require(!f.empty(), "division by the zero polynomial");
        RightDivision res;
        Poly p = p_in;
        const Exponent beta = lm(f);
        while (!p.empty()) {
            const Exponent gamma = lm(p);
            if (!monomial_divides(beta, gamma)) {
                add_term(res.remainder, gamma, lc(p));
                p.erase(p.begin());
                continue;
            }
            Exponent alpha(gamma);
            for (std::size_t v = 0; v < alpha.size(); ++v) alpha[v] -= beta[v];
            const Poly fx = mul(f, monomial(K_.one(), alpha));
            const V c = sigma_exp(beta, K_.mul(lc(p), K_.inv(coeff(fx, gamma))), -1);
            const Poly term = monomial(c, alpha);
            const Poly prod = mul(f, term);
            if (prod.empty() || lm(prod) != gamma || !K_.equal(lc(prod), lc(p)))
                throw std::logic_error("right division step failed to cancel the leading term");
            p = sub(p, prod);
            add_term(res.quotient, alpha, c);
        }
        return res;
    }

    // ---- text I/O ----

    std::string monomial_string(const Exponent& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    std::string to_string(const Poly& p) const {
        if (p.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : p) {
            const auto f = K_.format(c);
            const std::string mono = monomial_string(e);
            if (f.negative)
                out += "-";
            else if (!out.empty())
                out += "+";
            if (mono.empty())
                out += f.body;
            else if (f.body == "1")
                out += mono;
            else
                out += f.body + "*" + mono;
        }
        return out;
    }

    Poly parse(const std::string& text) const {
        ParseAdapter ad{*this};
        return parse_expression(ad, text);
    }

private:
    K K_;
    std::vector<std::string> vars_;
    std::vector<long long> sigma_power_;
    std::vector<V> delta_w_;
    std::vector<Relation> rel_;
    mutable std::map<std::pair<std::size_t, Exponent>, Poly> cache_;

    struct ParseAdapter {
        using value_type = Poly;
        const PBWRing& R;
        Poly add(const Poly& a, const Poly& b) const { return R.add(a, b); }
        Poly sub(const Poly& a, const Poly& b) const { return R.sub(a, b); }
        Poly neg(const Poly& a) const { return R.neg(a); }
        Poly mul(const Poly& a, const Poly& b) const { return R.mul(a, b); }
        Poly div(const Poly& a, const Poly& b) const {
            if (b.size() != 1 || total_degree(b.begin()->first) != 0)
                throw std::invalid_argument("division is only allowed by nonzero constants");
            return R.mul(a, R.constant(R.field().inv(b.begin()->second)));
        }
        Poly pow(const Poly& a, unsigned n) const { return R.pow(a, n); }
        Poly number(const std::string& digits) const { return R.constant(R.field().from_decimal(digits)); }
        Poly atom(const std::string& name) const {
            for (std::size_t i = 0; i < R.nvars(); ++i)
                if (R.vars()[i] == name) return R.var(i);
            if (auto c = R.field().atom(name)) return R.constant(*c);
            throw std::invalid_argument("unknown symbol '" + name + "'");
        }
    };

    Poly s_poly(const Poly& f, const Poly& g) const {
        const Exponent& a = lm(f);
        const Exponent& b = lm(g);
        Exponent ga(a.size()), gb(a.size());
        for (std::size_t v = 0; v < a.size(); ++v) {
            const unsigned m = std::max(a[v], b[v]);
            ga[v] = m - a[v];
            gb[v] = m - b[v];
        }
        const Poly m1 = mul_mono_left(ga, f);
        const Poly m2 = mul_mono_left(gb, g);
        return sub(make_monic(m1), make_monic(m2));
    }

    std::vector<Poly> interreduce(std::vector<Poly> G) const {
        // Drop elements whose leading monomial is divisible by another's.
        std::vector<Poly> kept;
        for (std::size_t i = 0; i < G.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
                if (i == j) continue;
                if (monomial_divides(lm(G[j]), lm(G[i])) && (lm(G[j]) != lm(G[i]) || j < i)) redundant = true;
            }
            if (!redundant) kept.push_back(G[i]);
        }
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            Poly head = lt(kept[i]);
            Poly tail = kept[i];
            tail.erase(tail.begin());
            kept[i] = make_monic(add(head, reduce(tail, others)));
        }
        std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) { return DeglexGreater{}(lm(a), lm(b)); });
        return kept;
    }

    void check_division(const Poly& f, const std::vector<Poly>& F, const DivisionResult& res, bool degree_condition) const {
        Poly rebuilt = res.remainder;
        for (std::size_t i = 0; i < F.size(); ++i) rebuilt = add(rebuilt, mul(res.quotients[i], F[i]));
        if (rebuilt != f) throw std::logic_error("division does not reconstruct the dividend");
        if (!degree_condition || f.empty()) return;
        std::optional<Exponent> top;
        auto consider = [&](const Exponent& e) {
            if (!top || DeglexGreater{}(e, *top)) top = e;
        };
        for (std::size_t i = 0; i < F.size(); ++i) {
            if (res.quotients[i].empty()) continue;
            Exponent e = lm(res.quotients[i]);
            for (std::size_t v = 0; v < e.size(); ++v) e[v] += lm(F[i])[v];
            consider(e);
        }
        if (!res.remainder.empty()) consider(lm(res.remainder));
        if (!top || *top != lm(f)) throw std::logic_error("division violates the degree condition");
    }
};

}  // namespace skewalg
