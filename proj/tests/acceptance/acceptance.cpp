// Acceptance run: one PASS/FAIL line per criterion. All checks are exact (tolerance 0).

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <iomanip>
#include <sstream>

#include "presentation.hpp"
#include "skewalg/skewalg.hpp"

using namespace skewalg;

namespace {

constexpr int exact_tolerance = 0;  // every comparison below is equality of exact values

struct Check {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

std::shared_ptr<const FiniteField> gf(unsigned q, unsigned k) { return std::make_shared<const FiniteField>(q, k); }

std::vector<Poly> all_polys(const FiniteField& F, int d) {
    std::vector<Poly> out;
    Poly p(static_cast<std::size_t>(d) + 1, 0);
    while (true) {
        Poly t = p;
        OreRing::trim(t);
        out.push_back(t);
        std::size_t i = 0;
        while (i < p.size() && ++p[i] == F.size()) p[i++] = 0;
        if (i == p.size()) break;
    }
    return out;
}

std::vector<Poly> monic_up_to(const OreRing& A, int d) {
    std::vector<Poly> out;
    for (int e = 0; e <= d; ++e) A.for_each_monic(e, [&](const Poly& p) { out.push_back(p); });
    return out;
}

Poly random_poly(std::mt19937_64& rng, const FiniteField& F, int deg) {
    Poly p(static_cast<std::size_t>(deg) + 1);
    for (auto& c : p) c = static_cast<elem>(rng() % F.size());
    p.back() = 1 + static_cast<elem>(rng() % (F.size() - 1));
    return p;
}

std::vector<PointSet> all_subsets(const FiniteField& F) {
    std::vector<PointSet> out;
    for (unsigned mask = 0; mask < (1u << F.size()); ++mask) {
        PointSet X;
        for (elem z = 0; z < F.size(); ++z)
            if (mask >> z & 1) X.push_back(z);
        out.push_back(X);
    }
    return out;
}

PointSet unite(PointSet a, const PointSet& b) {
    a.insert(a.end(), b.begin(), b.end());
    return normalize_points(a);
}
PointSet intersect(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
bool includes(const PointSet& big, const PointSet& small) { return std::includes(big.begin(), big.end(), small.begin(), small.end()); }

// ---------------------------------------------------------------- 1

Check worked_examples() {
    Check c;
    auto F = gf(2, 2);
    const OreRing A(F, 1);
    auto p = [&](const char* s) { return A.parse(s); };
    c.require(A.mul(p("x^2+w*x+w"), p("x+w")) == p("x^3+w^2*x+w^2"), "(x^2+wx+w)(x+w)");
    c.require(A.mul(p("x+1"), p("x+1")) == p("x^2+1"), "(x+1)(x+1)");
    c.require(A.mul(p("x+w^2"), p("x+w")) == p("x^2+1"), "(x+w^2)(x+w)");
    c.require(A.mul(p("x+w"), p("x+w^2")) == p("x^2+1"), "(x+w)(x+w^2)");
    c.require(vanishing_set(A, p("x^2+1")) == PointSet{1, F->parse("w"), F->parse("w^2")}, "V(x^2+1)");
    c.require(A.right_divides(p("x+w"), p("x^3+w^2*x+w^2")), "x+w right-divides");
    c.require(!A.left_divides(p("x+w"), p("x^3+w^2*x+w^2")), "x+w does not left-divide");
    c.note << "product, three factorizations, V(x^2+1) = {1,w,w^2}, one-sided divisor";
    return c;
}

// ---------------------------------------------------------------- 2

Check conjugacy_census() {
    Check c;
    std::size_t rings = 0;
    for (auto [q, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}}) {
        auto F = gf(q, k);
        for (unsigned l = 0; l < k; ++l)
            for (bool inner : {false, true}) {
                const elem w = inner ? F->generator() : 0;
                const OreRing A(F, l, w);
                const unsigned r = l == 0 ? k : std::gcd(l, k);
                unsigned qr = 1, qk = 1;
                for (unsigned i = 0; i < r; ++i) qr *= q;
                for (unsigned i = 0; i < k; ++i) qk *= q;
                const elem special = A.has_delta() ? F->neg(w) : 0;
                std::set<std::vector<elem>> classes;
                for (elem z : F->elements()) {
                    const auto cls = A.conjugacy_class(z);
                    if (z == special)
                        c.require(cls == std::vector<elem>{special}, "singleton class of " + F->name());
                    else
                        c.require(cls.size() == (qk - 1) / (qr - 1), "class size in " + F->name());
                    classes.insert(cls);
                }
                c.require(classes.size() == qr, "class count q^r in " + F->name());
                ++rings;
            }
    }
    c.note << rings << " rings over GF(4), GF(8), GF(9), GF(16), all sigma, delta = 0 and inner";
    return c;
}

// ---------------------------------------------------------------- 3

Check degree_formula() {
    Check c;
    std::size_t pairs = 0;
    for (auto [q, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
        auto F = gf(q, k);
        for (bool inner : {false, true}) {
            const OreRing A(F, 1, inner ? F->generator() : 0);
            std::mt19937_64 rng(1000 + q * 10 + k + inner);
            for (int t = 0; t < 1000; ++t) {
                const Poly a = random_poly(rng, *F, static_cast<int>(rng() % 7));
                const Poly b = random_poly(rng, *F, static_cast<int>(rng() % 7));
                const Poly g = A.gcrd(a, b), m = A.lclm(a, b);
                c.require(OreRing::deg(g) + OreRing::deg(m) == OreRing::deg(a) + OreRing::deg(b), "degree formula");
                c.require(A.right_divides(g, a) && A.right_divides(g, b) && A.right_divides(a, m) && A.right_divides(b, m),
                          "divisibility");
                ++pairs;
            }
        }
    }
    c.note << pairs << " random pairs (1000 per ring; GF(4), GF(8), GF(9); delta = 0 and inner)";
    return c;
}

// ---------------------------------------------------------------- 4

Check evaluation_equivalence() {
    Check c;
    std::size_t evals = 0;
    for (auto [q, k] : {std::pair{2u, 2u}, {2u, 3u}}) {
        auto F = gf(q, k);
        const auto polys = all_polys(*F, 5);
        for (bool inner : {false, true}) {
            const OreRing A(F, 1, inner ? F->generator() : 0);
            for (const auto& g : polys)
                for (elem z : F->elements()) {
                    c.require(A.right_eval(g, z) == A.right_eval_by_division(g, z), "norm sum vs remainder");
                    ++evals;
                }
        }
    }
    c.note << evals << " (g, z) pairs, every g of degree <= 5 over GF(4) and GF(8)";
    return c;
}

// ---------------------------------------------------------------- 5

void algset_identities(Check& c, const OreRing& A, const PointSet& X, const PointSet& Y, const Poly& g, const Poly& h,
                       const Poly& t) {
    const FiniteField& F = A.field();
    const PointSet Vg = vanishing_set(A, g), Vh = vanishing_set(A, h);
    if (includes(Vg, Vh)) c.require(includes(vanishing_set(A, A.mul(g, t)), vanishing_set(A, A.mul(h, t))), "V(ht) in V(gt)");
    c.require(includes(vanishing_set(A, A.lclm(g, h)), unite(Vg, Vh)), "V(I) u V(J) in V(I n J)");
    c.require(vanishing_set(A, A.gcrd(g, h)) == intersect(Vg, Vh), "V(I + J)");
    const Poly mX = minimal_polynomial(A, X), mY = minimal_polynomial(A, Y);
    // I(X) = A m_X, tested on g and h
    for (const Poly* f : {&g, &h}) {
        bool vanish = true;
        for (elem z : X) vanish = vanish && A.right_eval(*f, z) == 0;
        c.require(vanish == A.right_divides(mX, *f), "I(X) = A m_X");
    }
    if (includes(Y, X)) c.require(A.right_divides(mX, mY), "X in Y => I(Y) in I(X)");
    c.require(A.right_divides(minimal_polynomial(A, Vg), g), "Ag in I(V(g))");
    c.require(includes(vanishing_set(A, mX), X), "X in V(I(X))");
    c.require(vanishing_set(A, minimal_polynomial(A, Vg)) == Vg, "V(I(V(g))) = V(g)");
    c.require(minimal_polynomial(A, vanishing_set(A, mX)) == mX, "I(V(I(X))) = I(X)");
    const PointSet U = unite(X, Y);
    c.require(minimal_polynomial(A, U) == A.lclm(mX, mY), "m_{X u Y} = lclm(m_X, m_Y)");
    c.require(rank_of_set(A, U) <= rank_of_set(A, X) + rank_of_set(A, Y), "rank subadditive");
    // any order of the linear factors
    Poly rev = A.one();
    for (auto it = X.rbegin(); it != X.rend(); ++it) rev = A.lclm(A.linear(*it), rev);
    c.require(rev == mX, "m_X = lclm(x - z_i) in any order");
    c.require(rank_of_set(A, X) <= static_cast<int>(X.size()), "rank <= |X|");
    c.require(static_cast<std::size_t>(rank_of_set(A, X)) == rank(F, vandermonde(A, X)), "rank = rank V_r");
}

Check algebraic_sets() {
    Check c;
    std::size_t cases = 0;
    {
        auto F = gf(2, 2);
        const auto subsets = all_subsets(*F);
        auto polys = all_polys(*F, 2);
        polys.erase(polys.begin());  // zero
        for (bool inner : {false, true}) {
            const OreRing A(F, 1, inner ? F->generator() : 0);
            c.require(vanishing_set(A, Poly{}) == F->elements(), "V(0) = F");
            c.require(vanishing_set(A, minimal_polynomial(A, F->elements())) == F->elements(), "V(l) = F");
            c.require(vanishing_set(A, A.one()).empty(), "V(1) empty");
            c.require(minimal_polynomial(A, {}) == A.one(), "I(empty) = A");
            std::mt19937_64 rng(55 + inner);
            for (const auto& X : subsets)
                for (const auto& Y : subsets) {
                    const Poly& g = polys[rng() % polys.size()];
                    const Poly& h = polys[rng() % polys.size()];
                    const Poly& t = polys[rng() % polys.size()];
                    algset_identities(c, A, X, Y, g, h, t);
                    ++cases;
                }
            for (const auto& g : polys)
                for (const auto& h : polys) {
                    algset_identities(c, A, {}, {}, g, h, A.one());
                    ++cases;
                }
        }
    }
    {
        auto F = gf(2, 4);
        for (bool inner : {false, true}) {
            const OreRing A(F, 1, inner ? F->generator() : 0);
            std::mt19937_64 rng(77 + inner);
            for (int s = 0; s < 250; ++s) {
                PointSet X, Y;
                for (elem z = 0; z < F->size(); ++z) {
                    if (rng() % 4 == 0) X.push_back(z);
                    if (rng() % 4 == 0) Y.push_back(z);
                }
                algset_identities(c, A, X, Y, random_poly(rng, *F, 1 + static_cast<int>(rng() % 3)),
                                  random_poly(rng, *F, 1 + static_cast<int>(rng() % 3)), random_poly(rng, *F, static_cast<int>(rng() % 3)));
                ++cases;
            }
        }
    }
    c.note << cases << " cases: all subset pairs and polynomial pairs over GF(4), 500 samples over GF(16)";
    return c;
}

// ---------------------------------------------------------------- 6

Check bound_polynomials() {
    Check c;
    auto F = gf(2, 2);
    const OreRing A(F, 1);
    std::map<int, std::vector<Poly>> two_sided;
    for (const auto& h : monic_up_to(A, 6))
        if (A.is_two_sided(h)) two_sided[OreRing::deg(h)].push_back(h);
    std::size_t count = 0;
    for (const auto& f : monic_up_to(A, 3)) {
        const Poly b = A.bound_polynomial(f);
        c.require(A.is_two_sided(b) && A.is_two_sided_direct(b), "f* two-sided");
        c.require(A.right_divides(f, b), "f right-divides f*");
        if (A.is_two_sided(f)) c.require(b == f, "f* = f for two-sided f");
        for (int d = 0; d < OreRing::deg(b); ++d)
            for (const auto& h : two_sided[d]) c.require(!A.right_divides(f, h), "no lower-degree two-sided multiple");
        ++count;
    }
    c.note << count << " monic f of degree <= 3 over GF(4)[x; phi]; minimality by exhaustive search";
    return c;
}

// ---------------------------------------------------------------- 7

std::vector<Poly> all_monic_right_divisors(const OreRing& A, const Poly& f) {
    std::vector<Poly> out;
    for (int d = 0; d <= OreRing::deg(f); ++d)
        for (const auto& g : A.monic_right_divisors(f, d)) out.push_back(g);
    return out;
}

Check code_duality() {
    Check c;
    std::size_t codes = 0;
    for (auto [q, k] : {std::pair{2u, 2u}, {2u, 3u}}) {
        auto F = gf(q, k);
        const OreRing A(F, 1);
        const Poly f = xn_minus_one(A, k);
        for (const auto& g : all_monic_right_divisors(A, f)) {
            const SkewCyclicCode C(A, f, g);
            const LinearCode L = C.linear_code();
            const LinearCode D = L.dual();
            bool orth = true;
            if (L.dim() > 0 && D.dim() > 0)
                for (const auto& row : matmul(*F, L.generator(), transpose(L.parity_check()), D.dim()))
                    for (elem v : row) orth = orth && v == 0;
            c.require(orth, "G H^T = 0");
            c.require(L.dim() + D.dim() == C.length(), "dim + dim dual = n");
            c.require(D.dual() == L, "double dual");
            c.require(dual_skew_cyclic(C).linear_code() == D, "Theta dual = kernel dual");
            ++codes;
        }
    }
    c.note << codes << " codes (all monic right divisors of x^2+1 over GF(4) and x^3-1 over GF(8))";
    return c;
}

// ---------------------------------------------------------------- 8

Check idempotents() {
    Check c;
    {
        auto F = gf(2, 2);
        const OreRing A(F, 1);
        const Poly e = bezout_idempotent(A, A.parse("x+1"), A.parse("x+w"), 2);
        const Poly f = xn_minus_one(A, 2);
        c.require(is_idempotent_mod(A, e, f), "e^2 = e over GF(4)");
        c.require(idempotent_to_generator(A, e, 2) == A.parse("x+1"), "gcrd recovers x+1");
        c.note << "GF(4): e = " << A.to_string(e) << "; ";
    }
    auto F = gf(2, 3);
    const OreRing A(F, 1);
    const Poly f = xn_minus_one(A, 3);
    std::size_t pairs = 0;
    for (const auto& g : all_monic_right_divisors(A, f))
        for (const auto& h : all_monic_right_divisors(A, f)) {
            if (OreRing::deg(g) + OreRing::deg(h) != 3 || A.lclm(g, h) != f || A.gcrd(g, h) != A.one()) continue;
            const Poly e = bezout_idempotent(A, g, h, 3);
            c.require(is_idempotent_mod(A, e, f), "e^2 = e over GF(8)");
            c.require(idempotent_to_generator(A, e, 3) == g, "gcrd recovers g over GF(8)");
            ++pairs;
        }
    c.require(pairs > 0, "complementary pairs exist");
    c.note << pairs << " complementary pairs of x^3-1 over GF(8)";
    return c;
}

// ---------------------------------------------------------------- 9

void for_each_support(const FiniteField& F, std::size_t max_r, const std::function<void(const std::vector<elem>&)>& fn) {
    for (const auto& X : all_subsets(F))
        if (!X.empty() && X.size() <= max_r) fn(X);
}

Check mds_mrd() {
    Check c;
    std::size_t mds = 0, mrd = 0, cross = 0;
    for (auto [q, k] : {std::pair{2u, 2u}, {2u, 3u}}) {
        auto F = gf(q, k);
        for (bool inner : {false, true}) {
            const OreRing A(F, 1, inner ? F->generator() : 0);
            for_each_support(*F, 4, [&](const std::vector<elem>& Z) {
                if (rank(*F, vandermonde(A, Z)) != Z.size()) return;
                for (std::size_t kk = 1; kk <= Z.size(); ++kk) {
                    const auto r = certify(A, remainder_code(A, Z, kk), CodeKind::MDS);
                    c.require(r.holds, "remainder code is MDS");
                    c.require(r.distance <= r.bound, "Singleton bound (Hamming)");
                    c.require(r.cross_check, "column criterion agrees");
                    cross += r.cross_checked;
                    ++mds;
                }
            });
        }
        const OreRing A(F, 1);
        for_each_support(*F, 4, [&](const std::vector<elem>& Z) {
            if (prime_rank(*F, Z) != Z.size()) return;
            for (std::size_t kk = 1; kk <= Z.size(); ++kk) {
                const auto r = certify(A, operator_code(A, Z, kk), CodeKind::MRD);
                c.require(r.holds, "operator code is MRD");
                c.require(r.distance <= r.bound, "Singleton bound (rank)");
                c.require(r.cross_check, "rank criterion agrees");
                cross += r.cross_checked;
                ++mrd;
            }
        });
    }
    c.note << mds << " remainder codes certified MDS, " << mrd << " operator codes certified MRD, " << cross
           << " independently cross-checked";
    return c;
}

// ---------------------------------------------------------------- 10

Check linearized_algebra() {
    Check c;
    auto F = gf(2, 2);
    const OreRing A(F, 1);
    const auto polys = all_polys(*F, 3);
    std::size_t pairs = 0;
    for (const auto& a : polys)
        for (const auto& b : polys) {
            auto comp = compose(*F, to_linearized(A, a), to_linearized(A, b));
            while (!comp.empty() && comp.back() == 0) comp.pop_back();
            c.require(to_linearized(A, A.mul(a, b)) == comp, "Lambda(ab) = Lambda(a) o Lambda(b)");
            c.require(to_linearized(A, A.add(a, b)) == [&] {
                auto s = to_linearized(A, a);
                const auto t = to_linearized(A, b);
                s.resize(std::max(s.size(), t.size()), 0);
                for (std::size_t i = 0; i < t.size(); ++i) s[i] = F->add(s[i], t[i]);
                while (!s.empty() && s.back() == 0) s.pop_back();
                return s;
            }(), "Lambda additive");
            ++pairs;
        }
    std::size_t dickson = 0;
    for (unsigned k = 1; k <= 3; ++k) {
        FiniteField G(2, k);
        LinearizedPoly g(k, 0);
        while (true) {
            c.require(dickson_identity_holds(G, g, canonical_basis(G)), "D_g = M(X) M_g M(X)^-1");
            ++dickson;
            std::size_t i = 0;
            while (i < k && ++g[i] == G.size()) g[i++] = 0;
            if (i == k) break;
        }
    }
    const auto rep = matrix_algebra_check(2, 2);
    c.require(rep.isomorphism() && rep.distinct_images == 16, "g -> M_g onto all 2^4 matrices");
    c.note << pairs << " pairs over GF(4), " << dickson << " Dickson identities (q = 2, k <= 3), " << rep.distinct_images
           << " distinct images for (2,2)";
    return c;
}

// ---------------------------------------------------------------- 11

Check pbw_division() {
    Check c;
    const auto W = cli::build_presentation(RationalField{}, cli::read_json_file(SKEWALG_DATA_DIR "/witten.json"));
    const auto rw = W.divide_leading(W.parse("x^2*y+x*z+y*z"), {W.parse("x-1"), W.parse("y+2"), W.parse("z+3")});
    c.require(rw.quotients[0] == W.parse("1/2*x*y+1/4*y"), "Witten q1");
    c.require(rw.quotients[1] == W.parse("1/4"), "Witten q2");
    c.require(rw.quotients[2].empty(), "Witten q3");
    c.require(rw.remainder == W.parse("x*z+y*z-1/2"), "Witten h");

    const auto Q = cli::build_presentation(GaussianRationalField{}, cli::read_json_file(SKEWALG_DATA_DIR "/qspace.json"));
    const auto f = Q.parse("x^2*y+y*z^2+x*z");
    const std::vector F{Q.parse("x-i"), Q.parse("y-2*i"), Q.parse("z-3*i")};
    const auto rq = Q.divide_leading(f, F);
    c.require(rq.remainder == Q.parse("y*z^2+x*z+1/2*i"), "quantum h");
    c.require(rq.quotients[1] == Q.parse("1/4"), "quantum q2");
    c.require(rq.quotients[2].empty(), "quantum q3");
    c.require(rq.quotients[0] == Q.parse("-1/2*i*x*y-1/4*i*y"), "quantum q1 (sign-corrected)");
    // The sign-flipped q1 = 1/2 i xy - 1/4 i y does not reconstruct f under yx = 2i xy.
    const auto printed = Q.add(Q.add(Q.mul(Q.parse("1/2*i*x*y-1/4*i*y"), F[0]), Q.mul(rq.quotients[1], F[1])), rq.remainder);
    c.require(printed != f, "sign-flipped q1 inconsistent");
    c.note << "Witten q1, q2, q3, h exact; quantum space q2, q3, h exact, q1 = " << Q.to_string(rq.quotients[0])
           << " (the sign-flipped q1 fails reconstruction)";
    return c;
}

// ---------------------------------------------------------------- 12

using GPoly = PBWRing<FiniteField>::Poly;
using GPoint = std::vector<elem>;

GPoly random_gpoly(const PBWRing<FiniteField>& R, std::mt19937_64& rng, unsigned d) {
    GPoly f;
    for (const auto& e : monomials_up_to(R.nvars(), d))
        if (rng() % 2) R.add_term(f, e, static_cast<elem>(rng() % R.field().size()));
    return f;
}

Check geometry() {
    Check c;
    FiniteField F(3, 2);
    PBWRing<FiniteField> R(F, {"x", "y"});
    R.set_relation(1, 0, F.parse("-1"), {}, 0);
    PointOracle<FiniteField> O(R);
    const auto domain = all_points(F, 2);
    auto V = [&](const std::vector<GPoly>& S) { return O.vanishing_set(S, domain); };
    auto subset = [](const std::vector<GPoint>& a, const std::vector<GPoint>& b) {
        for (const auto& z : a)
            if (std::find(b.begin(), b.end(), z) == b.end()) return false;
        return true;
    };
    std::mt19937_64 rng(412);

    // Every point lies in V(<Z>); I({Z}) = <Z>
    c.require(V({R.zero()}).size() == 81, "V(0) = F^2");
    for (const auto& Z : domain) {
        std::vector<GPoly> gens;
        for (std::size_t i = 0; i < 2; ++i) gens.push_back(O.point_ideal_generator(Z, i));
        c.require(O.all_roots(gens, Z), "Z in V(<Z>)");
        const auto s = R.sub(R.add(R.var(0), R.var(1)), R.constant(F.add(Z[0], Z[1])));
        c.require(O.root_test(s, Z), "Z in V(x1 - z1 + x2 - z2)");
    }
    // Points whose ideal is the whole ring are roots of everything, including 1.
    std::size_t whole = 0;
    for (const auto& Z : domain) whole += O.ideal_is_whole_ring(Z);
    c.require(V({R.one()}).size() == whole, "V(1) = points with <Z> = A");
    std::size_t rounds = 0;
    for (int t = 0; t < 100; ++t) {
        const GPoly f = random_gpoly(R, rng, 2), g = random_gpoly(R, rng, 2), h = random_gpoly(R, rng, 1);
        const auto Vf = V({f}), Vg = V({g});
        for (const auto& Z : domain)
            if (O.root_test(f, Z) && O.root_test(g, Z)) c.require(O.root_test(R.add(f, g), Z), "(f+g)(Z) = 0");
        c.require(subset(Vf, V({R.mul(R.mul(g, f), h)})), "V(f) in V(gfh)");
        // V(S) = V(AS) = V(SA) = V(ASA) on sampled multiples
        const GPoly a = random_gpoly(R, rng, 1), b = random_gpoly(R, rng, 1);
        c.require(V({f, R.mul(a, f)}) == Vf && V({f, R.mul(f, b)}) == Vf && V({f, R.mul(R.mul(a, f), b)}) == Vf, "V(S) = V(ASA)");
        c.require(subset(V({f, g}), Vf), "S in T => V(T) in V(S)");
        // fg and gf lie in the intersection of the two-sided ideals
        std::vector<GPoint> uni = Vf;
        for (const auto& z : Vg)
            if (std::find(uni.begin(), uni.end(), z) == uni.end()) uni.push_back(z);
        c.require(subset(uni, V({R.mul(f, g), R.mul(g, f)})), "V(I) u V(J) in V(I n J)");
        std::vector<GPoint> inter;
        for (const auto& z : Vf)
            if (std::find(Vg.begin(), Vg.end(), z) != Vg.end()) inter.push_back(z);
        c.require(V({f, g}) == inter, "V(I + J) = V(I) n V(J)");

        // ideals of points on random X, Y
        std::vector<GPoint> X, Y;
        for (const auto& Z : domain) {
            if (rng() % 12 == 0) X.push_back(Z);
            if (rng() % 12 == 0) Y.push_back(Z);
        }
        std::vector<GPoint> XY = X;
        for (const auto& z : Y)
            if (std::find(XY.begin(), XY.end(), z) == XY.end()) XY.push_back(z);
        const auto IX = ideal_of_points_truncated(O, X, 2);
        // I(X u Y) in I(X), X in V(I(X)), I in I(V(I))
        for (const auto& p : ideal_of_points_truncated(O, XY, 2)) c.require(O.in_ideal_of_points(p, X), "I(Y) in I(X)");
        c.require(subset(X, V(IX)), "X in V(I(X))");
        for (const auto& p : IX) c.require(O.in_ideal_of_points(p, V(IX)), "I in I(V(I))");
        // Closure identities, checked in degree <= 2
        const auto IVf = ideal_of_points_truncated(O, Vf, 2);
        c.require(V(IVf) == Vf, "V(I(V(f))) = V(f)");
        for (int s = 0; s < 5; ++s) {
            const GPoly p = random_gpoly(R, rng, 2);
            c.require(O.in_ideal_of_points(p, V(IX)) == O.in_ideal_of_points(p, X), "I(V(I(X))) = I(X)");
            c.require(O.in_ideal_of_points(p, XY) == (O.in_ideal_of_points(p, X) && O.in_ideal_of_points(p, Y)),
                      "I(X u Y) = I(X) n I(Y)");
        }
        c.require(O.in_ideal_of_points(R.one(), {}), "I(empty) = A");
        ++rounds;
    }

    // yx = xy - 1, z central: the left ideal of (1,0,0) is the whole ring.
    const auto M = cli::build_presentation(RationalField{}, cli::read_json_file(SKEWALG_DATA_DIR "/shifted_weyl.json"));
    const auto one = M.add(M.mul(M.neg(M.parse("y")), M.parse("x-1")), M.mul(M.parse("x-1"), M.parse("y")));
    c.require(one == M.one(), "1 = -y(x-1) + (x-1)y");
    const auto G = M.groebner_left({M.parse("x-1"), M.parse("y"), M.parse("z")});
    c.require(G.basis == std::vector{M.one()}, "1 in I");
    // The generators of I are exactly x_i - z_i for Z = (1,0,0), so Z is a common root and V(A) contains it.
    c.require(M.parse("x-1") == M.sub(M.var(0), M.constant(1)) && M.parse("y") == M.var(1) && M.parse("z") == M.var(2),
              "(1,0,0) in V(A)");

    // Semiprimeness of point ideals.
    std::size_t instances = 0, attempts = 0;
    while (instances < 200 && attempts < 20000) {
        ++attempts;
        const GPoint Z = domain[rng() % domain.size()];
        GPoly f = random_gpoly(R, rng, 3);
        if (rng() % 2) f = R.sub(f, O.normal_form(f, Z));
        if (!O.root_test(R.mul(f, f), Z)) continue;
        c.require(O.root_test(f, Z), "f^2 in <Z> => f in <Z>");
        ++instances;
    }
    c.require(instances == 200, "200 instances");
    std::size_t proper = 0;
    for (const auto& Z : domain) proper += !O.ideal_is_whole_ring(Z);
    c.note << rounds << " rounds of variety and ideal identities over all 81 points (" << proper
           << " points with a proper point ideal); unit-ideal example; " << instances << " semiprime instances";
    return c;
}

// ---------------------------------------------------------------- 13

Check nullstellensatz() {
    Check c;
    std::size_t instances = 0;
    std::set<std::string> unexercised;
    auto run = [&](unsigned q, unsigned k, const std::string& param, const std::vector<std::string>& ideals, unsigned d) {
        FiniteField F(q, k);
        PBWRing<FiniteField> R(F, {"x", "y"});
        R.set_relation(1, 0, F.parse(param), {}, 0);
        for (const auto& text : ideals) {
            std::vector<GPoly> I;
            for (const auto& s : std::vector<std::string>{text}) {
                std::size_t pos = 0;
                while (pos != std::string::npos) {
                    const auto next = s.find(',', pos);
                    I.push_back(R.parse(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
                    pos = next == std::string::npos ? next : next + 1;
                }
            }
            const auto rep = nullstellensatz_check(R, I, d, 12, 7);
            c.require(rep.radical_side_ok(), "central f, f^m in I => f in I(V(I)) over " + F.name());
            c.require(rep.radical_instances > 0, "instances exercised over " + F.name());
            c.require(!rep.unexercised.empty(), "unexercised inclusions listed");
            instances += rep.radical_instances;
            for (const auto& u : rep.unexercised) unexercised.insert(u);
        }
    };
    run(2, 2, "w", {"x^3-1", "x^3-1,y^3", "x*y"}, 3);
    run(3, 2, "-1", {"x^2-1,y", "y^2-1", "x^2+y^2"}, 4);
    c.note << instances << " sampled instances over GF(4) (q = w) and GF(9) (q = -1); unexercised: ";
    std::string sep;
    for (const auto& u : unexercised) {
        c.note << sep << u;
        sep = " | ";
    }
    return c;
}

}  // namespace

int main() {
    static_assert(exact_tolerance == 0);
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"worked-example regression", worked_examples},
        {"conjugacy census", conjugacy_census},
        {"degree formula", degree_formula},
        {"evaluation equivalence", evaluation_equivalence},
        {"algebraic-set laws", algebraic_sets},
        {"bound polynomial", bound_polynomials},
        {"code duality", code_duality},
        {"idempotents", idempotents},
        {"MDS/MRD", mds_mrd},
        {"linearized algebra", linearized_algebra},
        {"PBW division regression", pbw_division},
        {"geometry laws", geometry},
        {"Nullstellensatz consequence", nullstellensatz},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.note << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << c.note.str() << " ("
                  << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
        failures += !c.ok;
    }
    return failures == 0 ? 0 : 1;
}
