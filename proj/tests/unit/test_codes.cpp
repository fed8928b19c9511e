#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace skewalg;

namespace {

struct Gf4Codes : ::testing::Test {
    std::shared_ptr<const FiniteField> F = std::make_shared<const FiniteField>(2, 2);
    OreRing A{F, 1};
    Poly p(const std::string& s) const { return A.parse(s); }
    elem e(const std::string& s) const { return F->parse(s); }
};

std::vector<Poly> monic_right_divisors_all(const OreRing& A, const Poly& f) {
    std::vector<Poly> out;
    for (int d = 0; d <= OreRing::deg(f); ++d)
        for (const auto& g : A.monic_right_divisors(f, d)) out.push_back(g);
    return out;
}

bool zero_matrix_product(const FiniteField& F, const Matrix<elem>& G, const Matrix<elem>& H) {
    if (G.empty() || H.empty()) return true;
    const auto P = matmul(F, G, transpose(H), H.size());
    for (const auto& row : P)
        for (elem v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace

TEST_F(Gf4Codes, WordMap) {
    EXPECT_EQ(word_map(A, {1, 1}, p("x^2+1")), p("x+1"));
    EXPECT_EQ(word_unmap(A, A.mul(p("x"), p("x+1")), p("x^2+1")), (std::vector<elem>{1, 1}));
    EXPECT_THROW(word_map(A, {1}, p("x^2+1")), std::domain_error);
}

TEST_F(Gf4Codes, SmallCodes) {
    const SkewCyclicCode C(A, p("x^2+1"), p("x+1"));
    EXPECT_EQ(C.length(), 2u);
    EXPECT_EQ(C.dim(), 1u);
    EXPECT_EQ(C.generator_matrix(), (Matrix<elem>{{1, 1}}));
    EXPECT_EQ(C.linear_code().dual().generator(), (Matrix<elem>{{1, 1}}));
    EXPECT_TRUE(C.linear_code() == C.linear_code().dual());

    const SkewCyclicCode full(A, p("x^2+1"), A.one());
    EXPECT_EQ(full.generator_matrix(), identity_matrix(*F, 2));
    EXPECT_EQ(full.linear_code().dual().dim(), 0u);
    const SkewCyclicCode zero(A, p("x^2+1"), p("x^2+1"));
    EXPECT_EQ(zero.dim(), 0u);
    EXPECT_EQ(zero.linear_code().dual().dim(), 2u);
    EXPECT_THROW(SkewCyclicCode(A, p("x^2+1"), p("x")), std::domain_error);
}

TEST_F(Gf4Codes, RightMultiplicationAndTheta) {
    EXPECT_EQ(right_mult_matrix(A, A.one(), 2), identity_matrix(*F, 2));
    EXPECT_EQ(right_mult_matrix(A, p("x"), 2), (Matrix<elem>{{0, 1}, {1, 0}}));
    EXPECT_THROW(right_mult_matrix(OreRing(F, 0), p("x"), 2), std::domain_error);
    const Poly f = xn_minus_one(A, 2);
    for (const auto& g : oracle::Ore{*F, 1, 0}.all_polys(1)) {
        const auto M = right_mult_matrix(A, g, 2);
        for (const auto& v : oracle::Ore{*F, 1, 0}.all_polys(1)) {
            std::vector<elem> w(2, 0);
            std::copy(v.begin(), v.end(), w.begin());
            EXPECT_EQ(vecmul(*F, w, M, 2), word_unmap(A, A.mul(v, g), f));
        }
    }
}

TEST_F(Gf4Codes, Idempotents) {
    const SkewCyclicCode C(A, p("x^2+1"), p("x+1"));
    EXPECT_EQ(generating_idempotent(C), p("w*x+w"));
    EXPECT_EQ(bezout_idempotent(A, p("x+1"), p("x+w"), 2), p("w*x+w"));
    EXPECT_EQ(idempotent_to_generator(A, p("w*x+w"), 2), p("x+1"));
    EXPECT_EQ(idempotent_to_generator(A, A.one(), 2), A.one());
    EXPECT_EQ(idempotent_to_generator(A, Poly{}, 2), p("x^2+1"));
    EXPECT_EQ(bezout_idempotent(A, A.one(), p("x^2+1"), 2), A.one());
    EXPECT_THROW(idempotent_to_generator(A, p("x"), 2), std::domain_error);
    EXPECT_EQ(dual_skew_cyclic(C).divisor(), p("x+1"));
}

class CodeDuality : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(CodeDuality, EveryDivisorOfXnMinusOne) {
    const auto [q, k] = GetParam();
    auto F = std::make_shared<const FiniteField>(q, k);
    const OreRing A(F, 1);
    const Poly f = xn_minus_one(A, k);
    const auto divisors = monic_right_divisors_all(A, f);
    ASSERT_FALSE(divisors.empty());
    for (const auto& g : divisors) {
        const SkewCyclicCode C(A, f, g);
        const LinearCode L = C.linear_code();
        EXPECT_TRUE(zero_matrix_product(*F, L.generator(), L.parity_check()));
        EXPECT_EQ(L.dim() + L.dual().dim(), C.length());
        EXPECT_TRUE(L.dual().dual() == L);
        EXPECT_TRUE(dual_skew_cyclic(C).linear_code() == L.dual());
        // Closed under the twisted shift.
        C.for_each_element([&](const Poly& c) {
            std::vector<elem> v(C.length(), 0);
            std::copy(c.begin(), c.end(), v.begin());
            std::vector<elem> s(C.length());
            s[0] = A.sigma(v.back());
            for (std::size_t i = 1; i < v.size(); ++i) s[i] = A.sigma(v[i - 1]);
            EXPECT_TRUE(L.contains(s));
        });
        if (C.dim() > 0) {
            const Poly e = generating_idempotent(C);
            EXPECT_TRUE(is_idempotent_mod(A, e, f));
            EXPECT_EQ(idempotent_to_generator(A, e, C.length()), g);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, CodeDuality, ::testing::Values(std::make_pair(2u, 2u), std::make_pair(2u, 3u), std::make_pair(3u, 2u)));

TEST(Codes, BezoutPairsOverGf8) {
    auto F = std::make_shared<const FiniteField>(2, 3);
    const OreRing A(F, 1);
    const Poly f = xn_minus_one(A, 3);
    std::size_t pairs = 0;
    for (int d = 0; d <= 3; ++d)
        for (const auto& g : A.monic_right_divisors(f, d))
            for (const auto& h : A.monic_right_divisors(f, 3 - d)) {
                if (A.lclm(g, h) != f || A.gcrd(g, h) != A.one()) continue;
                const Poly e = bezout_idempotent(A, g, h, 3);
                EXPECT_TRUE(is_idempotent_mod(A, e, f));
                EXPECT_EQ(idempotent_to_generator(A, e, 3), g);
                ++pairs;
            }
    EXPECT_GT(pairs, 2u);
}
