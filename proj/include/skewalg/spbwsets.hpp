#pragma once

/**
 * @file spbwsets.hpp
 * @brief Roots, vanishing sets, ideals of points, normality and center computations for skew PBW rings.
 *
 * Z is a root of f when f lies in the two-sided ideal <x_1 - z_1, ..., x_n - z_n>.
 * Membership is decided with a left Groebner basis of that ideal, which is
 * available for quasi-commutative presentations (see two_sided_closure).
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gf.hpp"
#include "linalg.hpp"
#include "spbw.hpp"

namespace skewalg {

template <class K>
class PointOracle {
public:
    using Ring = PBWRing<K>;
    using V = typename K::value_type;
    using Poly = typename Ring::Poly;
    using Point = std::vector<V>;

    explicit PointOracle(const Ring& R) : R_(R) {
        require(R_.is_quasi_commutative(), "root test needs a quasi-commutative presentation");
    }

    const Ring& ring() const { return R_; }

    Poly point_ideal_generator(const Point& Z, std::size_t i) const {
        return R_.sub(R_.var(i), R_.constant(Z[i]));
    }

    /// Left Groebner basis of <Z>, cached per point.
    const std::vector<Poly>& ideal_basis(const Point& Z) const {
        require(Z.size() == R_.nvars(), "point has the wrong number of coordinates");
        if (auto it = cache_.find(Z); it != cache_.end()) return it->second;
        std::vector<Poly> gens;
        for (std::size_t i = 0; i < Z.size(); ++i) gens.push_back(point_ideal_generator(Z, i));
        auto G = R_.two_sided_closure(gens);
        if (!G.complete) throw guard_exceeded("two-sided closure did not stabilise");
        return cache_.emplace(Z, std::move(G.basis)).first->second;
    }

    /// True when <Z> is the whole ring.
    bool ideal_is_whole_ring(const Point& Z) const {
        const auto& G = ideal_basis(Z);
        return G.size() == 1 && total_degree(R_.lm(G.front())) == 0;
    }

    Poly normal_form(const Poly& f, const Point& Z) const { return R_.reduce(f, ideal_basis(Z)); }
    bool root_test(const Poly& f, const Point& Z) const { return normal_form(f, Z).empty(); }

    bool all_roots(const std::vector<Poly>& S, const Point& Z) const {
        for (const auto& f : S)
            if (!root_test(f, Z)) return false;
        return true;
    }

    std::vector<Point> vanishing_set(const std::vector<Poly>& S, const std::vector<Point>& domain) const {
        std::vector<Point> out;
        for (const auto& Z : domain)
            if (all_roots(S, Z)) out.push_back(Z);
        return out;
    }

    /// f in I(X): f vanishes at every point of X.
    bool in_ideal_of_points(const Poly& f, const std::vector<Point>& X) const {
        for (const auto& Z : X)
            if (!root_test(f, Z)) return false;
        return true;
    }

private:
    const Ring& R_;
    mutable std::map<Point, std::vector<Poly>> cache_;
};

/// Every point of K^n for a finite field K, in lexicographic index order.
inline std::vector<std::vector<elem>> all_points(const FiniteField& F, std::size_t n) {
    std::vector<std::vector<elem>> out;
    std::vector<elem> p(n, 0);
    while (true) {
        out.push_back(p);
        std::size_t pos = n;
        while (pos-- > 0) {
            if (++p[pos] < F.size()) break;
            p[pos] = 0;
            if (pos == 0) return out;
        }
        if (n == 0) return out;
    }
}

/// Standard monomials of total degree <= d, in increasing deglex order.
inline std::vector<Exponent> monomials_up_to(std::size_t n, unsigned d) {
    std::vector<Exponent> out;
    Exponent e(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == n) {
            out.push_back(e);
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            e[i] = a;
            rec(i + 1, left - a);
        }
        e[i] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) { return DeglexGreater{}(b, a); });
    return out;
}

/// Basis (as polynomials) of {f : deg f <= d, f(Z) = 0 for all Z in X}. Truncated: higher degrees are not covered.
template <class K>
std::vector<typename PBWRing<K>::Poly> ideal_of_points_truncated(const PointOracle<K>& O, const std::vector<std::vector<typename K::value_type>>& X, unsigned d) {
    const auto& R = O.ring();
    const auto monos = monomials_up_to(R.nvars(), d);
    // Normal forms are K-linear in f; collect them as coordinate rows over a shared monomial index.
    std::map<Exponent, std::size_t, DeglexGreater> col;
    std::vector<std::vector<std::pair<Exponent, typename K::value_type>>> nfs(monos.size());
    for (std::size_t m = 0; m < monos.size(); ++m)
        for (std::size_t p = 0; p < X.size(); ++p) {
            auto nf = O.normal_form(R.monomial(R.field().one(), monos[m]), X[p]);
            for (const auto& [e, c] : nf) {
                Exponent key = e;
                key.push_back(static_cast<unsigned>(p));
                col.emplace(key, 0);
                nfs[m].emplace_back(key, c);
            }
        }
    std::size_t idx = 0;
    for (auto& [k, v] : col) v = idx++;
    Matrix<typename K::value_type> M(monos.size(), std::vector<typename K::value_type>(col.size(), R.field().zero()));
    for (std::size_t m = 0; m < monos.size(); ++m)
        for (const auto& [key, c] : nfs[m]) M[m][col.at(key)] = c;
    const auto ker = left_kernel(R.field(), M);
    std::vector<typename PBWRing<K>::Poly> out;
    for (const auto& v : ker) {
        typename PBWRing<K>::Poly f;
        for (std::size_t m = 0; m < monos.size(); ++m) R.add_term(f, monos[m], v[m]);
        if (!f.empty()) out.push_back(R.make_monic(f));
    }
    return out;
}

template <class K>
struct NormalityResult {
    bool normal = false;
    std::string failure;  ///< first failed check, empty when normal
    std::vector<typename PBWRing<K>::Poly> left_witness;   ///< x_i f = f u_i, then r f = f u
    std::vector<typename PBWRing<K>::Poly> right_witness;  ///< f x_i = v_i f, then f r = v f
};

/// Decides Af = fA on the generators x_i and the field generator r.
template <class K>
NormalityResult<K> normality_test(const PBWRing<K>& R, const typename PBWRing<K>::Poly& f) {
    require(R.is_quasi_commutative(), "normality test needs a quasi-commutative presentation");
    require(!f.empty(), "normality test of zero");
    NormalityResult<K> res;
    std::vector<typename PBWRing<K>::Poly> gens;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        gens.push_back(R.var(i));
        names.push_back(R.vars()[i]);
    }
    gens.push_back(R.constant(R.field().generator()));
    names.push_back(R.field().to_string(R.field().generator()));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto lhs = R.mul(gens[i], f);
        auto rd = R.right_divide(lhs, f);
        if (!rd.remainder.empty()) {
            res.failure = names[i] + "*f is not in fA";
            return res;
        }
        if (R.mul(f, rd.quotient) != lhs) throw std::logic_error("left witness does not verify");
        res.left_witness.push_back(rd.quotient);

        const auto rhs = R.mul(f, gens[i]);
        auto ld = R.divide(rhs, {f});
        if (!ld.remainder.empty()) {
            res.failure = "f*" + names[i] + " is not in Af";
            return res;
        }
        if (R.mul(ld.quotients[0], f) != rhs) throw std::logic_error("right witness does not verify");
        res.right_witness.push_back(ld.quotients[0]);
    }
    res.normal = true;
    return res;
}

/// Monomials of degree <= d commuting with every variable and with the field generator.
template <class K>
std::vector<Exponent> center_basis(const PBWRing<K>& R, unsigned d) {
    require(R.is_quasi_commutative(), "center computation needs a quasi-commutative presentation");
    std::vector<Exponent> out;
    const auto r = R.constant(R.field().generator());
    for (const auto& e : monomials_up_to(R.nvars(), d)) {
        const auto m = R.monomial(R.field().one(), e);
        bool central = R.mul(r, m) == R.mul(m, r);
        for (std::size_t i = 0; i < R.nvars() && central; ++i) central = R.mul(R.var(i), m) == R.mul(m, R.var(i));
        if (central) out.push_back(e);
    }
    return out;
}

/// Outcome of the checkable Nullstellensatz consequences on a finite-field quantum space.
struct NullstellensatzReport {
    std::size_t points_in_variety = 0;
    // (a) central f with f^m in I implies f in I(V(I))
    std::size_t radical_instances = 0;
    std::size_t radical_holds = 0;
    std::size_t radical_found_by_search = 0;  ///< f^m in the given I found by searching central f
    // (b) center side, reported only
    std::size_t center_generators = 0;      ///< generators of J = I cap Z(A) up to the degree bound
    std::size_t center_points = 0;          ///< |V_Z(A)(J)| in the commutative coordinates
    std::size_t center_side_tested = 0;
    std::size_t center_side_contained = 0;
    bool center_side_available = false;
    std::vector<std::string> unexercised;
    bool radical_side_ok() const { return radical_holds == radical_instances; }
};

/**
 * Checks "central f, f^m in I  =>  f in I(V(I))" on sampled instances, and reports the
 * center-side inclusion. I is given by two-sided generators; V(I) is enumerated over all of K^n.
 */
inline NullstellensatzReport nullstellensatz_check(const PBWRing<FiniteField>& R, const std::vector<PBWRing<FiniteField>::Poly>& I,
                                                   unsigned d, std::size_t samples, std::uint64_t seed) {
    using Poly = PBWRing<FiniteField>::Poly;
    const FiniteField& F = R.field();
    PointOracle<FiniteField> O(R);
    NullstellensatzReport rep;
    const auto domain = all_points(F, R.nvars());
    const auto central = center_basis(R, d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<elem> coef(0, F.size() - 1);

    auto random_central = [&]() {
        Poly f;
        for (const auto& e : central) R.add_term(f, e, coef(rng));
        return f;
    };

    // Search in the given ideal first.
    {
        const auto G = R.two_sided_closure(I);
        require(G.complete, "closure of the ideal did not stabilise");
        const auto V = O.vanishing_set(I, domain);
        rep.points_in_variety = V.size();
        for (std::size_t t = 0; t < samples; ++t) {
            Poly f = random_central();
            if (f.empty()) continue;
            for (unsigned m = 1; m <= 3; ++m) {
                if (!R.reduce(R.pow(f, m), G.basis).empty()) continue;
                ++rep.radical_found_by_search;
                ++rep.radical_instances;
                bool ok = true;
                for (const auto& Z : V) ok = ok && O.root_test(f, Z);
                rep.radical_holds += ok;
                break;
            }
        }
    }
    // Constructed instances: I' = I + <f^m> contains f^m by construction.
    for (std::size_t t = 0; t < samples; ++t) {
        Poly f = random_central();
        if (f.empty()) continue;
        const unsigned m = 2 + static_cast<unsigned>(t % 2);
        std::vector<Poly> gens = I;
        gens.push_back(R.pow(f, m));
        const auto G = R.two_sided_closure(gens);
        if (!G.complete) continue;
        if (!R.reduce(R.pow(f, m), G.basis).empty()) throw std::logic_error("f^m not found in the ideal built from it");
        const auto V = O.vanishing_set(gens, domain);
        ++rep.radical_instances;
        bool ok = true;
        for (const auto& Z : V) ok = ok && O.root_test(f, Z);
        rep.radical_holds += ok;
    }

    // Center side: J = I cap Z(A) in degree <= d, viewed in the commutative coordinates u_i = x_i^{L_i}.
    std::vector<unsigned> L(R.nvars(), 0);
    for (const auto& e : central)
        for (std::size_t i = 0; i < R.nvars(); ++i) {
            Exponent pure(R.nvars(), 0);
            pure[i] = e[i];
            if (e[i] > 0 && e == pure && L[i] == 0) L[i] = e[i];
        }
    bool generated = std::all_of(L.begin(), L.end(), [](unsigned v) { return v > 0; });
    for (const auto& e : central)
        for (std::size_t i = 0; i < R.nvars() && generated; ++i) generated = e[i] % L[i] == 0;
    if (generated) {
        rep.center_side_available = true;
        const auto G = R.two_sided_closure(I);
        // Kernel of the normal-form map restricted to span(central).
        std::map<Exponent, std::size_t, DeglexGreater> col;
        std::vector<Poly> nfs;
        for (const auto& e : central) {
            nfs.push_back(R.reduce(R.monomial(F.one(), e), G.basis));
            for (const auto& [m, c] : nfs.back()) col.emplace(m, 0);
        }
        std::size_t idx = 0;
        for (auto& [k, v] : col) v = idx++;
        Matrix<elem> M(central.size(), std::vector<elem>(col.size(), 0));
        for (std::size_t r = 0; r < central.size(); ++r)
            for (const auto& [m, c] : nfs[r]) M[r][col.at(m)] = c;
        const auto J = left_kernel(F, M);
        rep.center_generators = J.size();
        // Commutative evaluation of sum v_r u^{e_r / L} at a point u.
        auto eval_central = [&](const std::vector<elem>& v, const std::vector<elem>& u) {
            elem acc = 0;
            for (std::size_t r = 0; r < central.size(); ++r) {
                if (v[r] == 0) continue;
                elem t = v[r];
                for (std::size_t i = 0; i < u.size(); ++i) t = F.mul(t, F.pow(u[i], central[r][i] / L[i]));
                acc = F.add(acc, t);
            }
            return acc;
        };
        std::vector<std::vector<elem>> VJ;
        for (const auto& u : domain) {
            bool zero = true;
            for (const auto& v : J) zero = zero && eval_central(v, u) == 0;
            if (zero) VJ.push_back(u);
        }
        rep.center_points = VJ.size();
        // I_Z(A)(V(J)) in degree <= d: central combinations vanishing on VJ.
        Matrix<elem> E(central.size(), std::vector<elem>(VJ.size(), 0));
        for (std::size_t r = 0; r < central.size(); ++r) {
            std::vector<elem> unit(central.size(), 0);
            unit[r] = 1;
            for (std::size_t p = 0; p < VJ.size(); ++p) E[r][p] = eval_central(unit, VJ[p]);
        }
        const auto IV = VJ.empty() ? identity_matrix(F, central.size()) : left_kernel(F, E);
        const auto V = O.vanishing_set(I, domain);
        for (const auto& v : IV) {
            Poly g;
            for (std::size_t r = 0; r < central.size(); ++r) R.add_term(g, central[r], v[r]);
            if (g.empty()) continue;
            ++rep.center_side_tested;
            bool ok = true;
            for (const auto& Z : V) ok = ok && O.root_test(g, Z);
            rep.center_side_contained += ok;
        }
    }
    rep.unexercised.push_back("the radical of I is not computed; only its central elements with a power in I are sampled");
    rep.unexercised.push_back("equalities that need an algebraically closed field are not asserted");
    rep.unexercised.push_back("the center-side inclusion is reported, not asserted");
    if (!rep.center_side_available) rep.unexercised.push_back("center is not generated by pure powers up to the degree bound");
    return rep;
}

}  // namespace skewalg
