#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"

using namespace skewalg;

TEST(Field, Gf4Elements) {
    FiniteField F(2, 2);
    EXPECT_EQ(F.size(), 4u);
    const elem w = F.parse("w");
    EXPECT_EQ(F.mul(w, w), F.add(w, 1));
    EXPECT_EQ(F.to_string(F.mul(w, w)), "w^2");
    EXPECT_EQ(F.add(F.mul(w, w), 1), w);
    EXPECT_EQ(F.pow(w, 3), 1u);
    EXPECT_EQ(F.frobenius(w, 1), F.mul(w, w));
    for (elem z : F.elements()) EXPECT_EQ(F.frobenius(z, 2), z);
}

TEST(Field, PrimeFieldGf2) {
    FiniteField F(2, 1);
    EXPECT_EQ(F.elements().size(), 2u);
    EXPECT_EQ(F.add(1, 1), 0u);
}

TEST(Field, Gf9MultiplicativeGroupIsCyclic) {
    FiniteField F(3, 2);
    std::set<elem> seen;
    elem p = 1;
    for (int i = 0; i < 8; ++i) {
        seen.insert(p);
        p = F.mul(p, F.generator());
    }
    EXPECT_EQ(seen.size(), 8u);
    EXPECT_EQ(p, 1u);
}

TEST(Field, RejectsNonPrimePowers) {
    EXPECT_THROW(parse_field_literal("GF(6)"), std::domain_error);
    EXPECT_THROW(FiniteField(4, 1), std::domain_error);
    EXPECT_THROW(FiniteField(2, 17), std::domain_error);
    EXPECT_EQ(parse_field_literal("GF(3^2)"), std::make_pair(3u, 2u));
    EXPECT_EQ(parse_field_literal("GF(16)"), std::make_pair(2u, 4u));
}

TEST(Field, InverseOfZeroFails) {
    FiniteField F(2, 3);
    EXPECT_THROW(F.inv(0), std::domain_error);
}

class FieldTables : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldTables, ArithmeticMatchesSchoolbookReference) {
    const auto [q, k] = GetParam();
    FiniteField F(q, k);
    for (elem a : F.elements())
        for (elem b : F.elements()) {
            ASSERT_EQ(F.mul(a, b), oracle::field_mul(F, a, b));
            ASSERT_EQ(F.add(a, b), oracle::field_add(F, a, b));
        }
    for (elem a : F.elements()) {
        EXPECT_EQ(F.neg(a), oracle::field_neg(F, a));
        if (a != 0) {
            EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
        }
        for (unsigned l = 0; l < k; ++l) EXPECT_EQ(F.frobenius(a, l), oracle::sigma(F, l, a));
    }
}

TEST_P(FieldTables, FrobeniusIsAFieldAutomorphism) {
    const auto [q, k] = GetParam();
    FiniteField F(q, k);
    for (elem a : F.elements())
        for (elem b : F.elements()) {
            ASSERT_EQ(F.frobenius(F.mul(a, b), 1), F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
            ASSERT_EQ(F.frobenius(F.add(a, b), 1), F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
        }
    for (elem a : F.elements()) EXPECT_EQ(F.frobenius(F.frobenius(a, 1), -1), a);
}

TEST_P(FieldTables, PrintParseRoundTrip) {
    const auto [q, k] = GetParam();
    FiniteField F(q, k);
    for (elem a : F.elements()) EXPECT_EQ(F.parse(F.to_string(a)), a);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldTables,
                         ::testing::Values(std::make_pair(2u, 1u), std::make_pair(2u, 2u), std::make_pair(2u, 3u),
                                           std::make_pair(3u, 2u), std::make_pair(2u, 4u), std::make_pair(5u, 2u)));

TEST(Field, FixedFieldSizes) {
    auto F4 = std::make_shared<const FiniteField>(2, 2);
    EXPECT_EQ(OreRing(F4, 1).fixed_field(), (std::vector<elem>{0, 1}));
    EXPECT_EQ(OreRing(F4, 0).fixed_field().size(), 4u);
    auto F16 = std::make_shared<const FiniteField>(2, 4);
    const auto fx = OreRing(F16, 2).fixed_field();
    EXPECT_EQ(fx.size(), 4u);
    for (elem z : fx) EXPECT_EQ(oracle::field_pow(*F16, z, 4), z);
}

TEST(Field, ResidueParsing) {
    FiniteField F(3, 2);
    const elem a = F.residue();
    EXPECT_EQ(F.parse("1+2*a"), F.add(1, F.mul(F.from_int(2), a)));
    EXPECT_EQ(F.coords(a), (std::vector<unsigned>{0, 1}));
}
