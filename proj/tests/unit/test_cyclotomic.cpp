#include "rigidcalc/cyclotomic.hpp"
#include "rigidcalc/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace rigidcalc;

namespace {

CycNumber random_element(std::mt19937_64& rng, long order)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    CycNumber x(0L);
    for (long k = 0; k < euler_phi(order); ++k)
        x += CycNumber(Rational(num(rng), den(rng)), order) * CycNumber::zeta(order, k);
    return x.lift(order);
}

Rational q(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace

TEST(Cyclotomic, PolynomialsOfSmallOrder)
{
    EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<Rational>{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<Rational>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Rational>{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Rational>{1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12).size() - 1, static_cast<std::size_t>(euler_phi(12)));
}

TEST(Cyclotomic, NormalizeReducesModuloPhi)
{
    const std::vector<Rational> zeta4_squared{0, 0, 1, 0};
    EXPECT_EQ(CycNumber::normalize(zeta4_squared, 4).coeffs(), (std::vector<Rational>{-1, 0}));
    const std::vector<Rational> zeta3_squared{0, 0, 1};
    EXPECT_EQ(CycNumber::normalize(zeta3_squared, 3).coeffs(), (std::vector<Rational>{-1, -1}));
    const std::vector<Rational> seven_halves{q(7, 2)};
    EXPECT_EQ(CycNumber::normalize(seven_halves, 1), CycNumber(q(7, 2), 1));
}

TEST(Cyclotomic, ZetaPowersReduce)
{
    // 1 + zeta3 + zeta3^2 = 0
    EXPECT_TRUE((CycNumber(1L) + CycNumber::zeta(3) + CycNumber::zeta(3, 2)).is_zero());
    // zeta4^2 = -1
    EXPECT_EQ(CycNumber::zeta(4, 2), CycNumber(-1L));
    EXPECT_EQ(CycNumber::zeta(12).pow(12), CycNumber(1L));
    EXPECT_EQ(CycNumber::zeta(5, -1), CycNumber::zeta(5, 4));
}

TEST(Cyclotomic, MixedOrdersLiftToLcm)
{
    const CycNumber sum = CycNumber::zeta(3) + CycNumber::zeta(4);
    EXPECT_EQ(sum.order(), 12);
    // zeta4 * zeta3 = zeta12^7
    EXPECT_EQ(CycNumber::zeta(4) * CycNumber::zeta(3), CycNumber::zeta(12, 7));
    // equal values at different orders compare equal
    EXPECT_EQ(CycNumber::zeta(2), CycNumber(-1L));
    EXPECT_EQ(CycNumber::zeta(6, 2), CycNumber::zeta(3));
}

TEST(Cyclotomic, InverseAndDivision)
{
    const CycNumber x = CycNumber(2L) + CycNumber::zeta(5);
    EXPECT_EQ(x * x.inverse(), CycNumber(1L));
    EXPECT_EQ((CycNumber(3L) / x) * x, CycNumber(3L));
    try {
        (void)CycNumber(0L, 7).inverse();
        FAIL() << "expected SingularMatrix";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
    }
}

TEST(Cyclotomic, ConjugationSendsZetaToInverse)
{
    EXPECT_EQ(CycNumber::zeta(7, 2).conj(), CycNumber::zeta(7, 5));
    EXPECT_EQ((CycNumber(q(1, 2), 1) + CycNumber::zeta(4)).conj(), CycNumber(q(1, 2), 1) - CycNumber::zeta(4));
}

TEST(Cyclotomic, EmbeddingValues)
{
    const BigComplex z = CycNumber::zeta(8).embed(1, 128);
    EXPECT_NEAR(z.re.to_double(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(z.im.to_double(), std::sqrt(0.5), 1e-15);
    const BigComplex w = CycNumber::zeta(8).embed(3, 128);
    EXPECT_NEAR(w.re.to_double(), -std::sqrt(0.5), 1e-15);
    try {
        (void)CycNumber::zeta(8).embed(2);
        FAIL() << "expected NotAnEmbedding";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAnEmbedding);
    }
}

TEST(Cyclotomic, InvalidOrderRejected)
{
    EXPECT_THROW((void)CycNumber::zeta(0), Error);
    EXPECT_THROW((void)RootOfUnity(1, 0), Error);
}

TEST(Cyclotomic, RationalParsing)
{
    EXPECT_EQ(parse_rational("-6/4"), q(-3, 2));
    EXPECT_EQ(to_string(q(4, 2)), "2");
    EXPECT_EQ(to_string(q(-3, 6)), "-1/2");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(RootOfUnityTest, NormalizationAndParsing)
{
    EXPECT_EQ(RootOfUnity(2, 4), RootOfUnity::minus_one());
    EXPECT_EQ(RootOfUnity(-1, 3), RootOfUnity(2, 3));
    EXPECT_EQ(RootOfUnity::parse("zeta3^2"), RootOfUnity(2, 3));
    EXPECT_EQ(RootOfUnity::parse("zeta6^-1"), RootOfUnity(5, 6));
    EXPECT_EQ(RootOfUnity::parse("-1").to_string(), "-1");
    EXPECT_EQ(RootOfUnity(1, 12).to_string(), "zeta12");
    EXPECT_EQ(RootOfUnity(4, 12).to_string(), "zeta3");
    EXPECT_THROW(RootOfUnity::parse("2"), Error);
    EXPECT_TRUE(RootOfUnity::one() < RootOfUnity::minus_one());
}

TEST(RootOfUnityTest, Recognize)
{
    RootOfUnity found;
    ASSERT_TRUE(RootOfUnity::recognize(CycNumber::zeta(12, 8), 12, found));
    EXPECT_EQ(found, RootOfUnity(2, 3));
    EXPECT_FALSE(RootOfUnity::recognize(CycNumber(2L), 12, found));
    EXPECT_EQ(RootOfUnity(1, 4).to_cyc(12), CycNumber::zeta(12, 3));
}

class FieldAxioms : public ::testing::TestWithParam<long> {};

TEST_P(FieldAxioms, RandomTriples)
{
    const long order = GetParam();
    std::mt19937_64 rng(20261016 + order);
    for (int trial = 0; trial < 1000; ++trial) {
        const CycNumber a = random_element(rng, order), b = random_element(rng, order), c = random_element(rng, order);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_TRUE((a - a).is_zero());
        if (!a.is_zero())
            ASSERT_EQ(a * a.inverse(), CycNumber(1L));
        ASSERT_EQ(a.conj().conj(), a);
        ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
        ASSERT_EQ((a + b).conj(), a.conj() + b.conj());
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms, ::testing::Values(1L, 2L, 3L, 4L, 6L, 12L));

TEST(CyclotomicProperty, EmbeddingIsMultiplicative)
{
    std::mt19937_64 rng(77);
    for (long order : {5L, 8L, 12L}) {
        for (int trial = 0; trial < 50; ++trial) {
            const CycNumber a = random_element(rng, order), b = random_element(rng, order);
            for (long e = 1; e < order; ++e) {
                if (gcd_long(e, order) != 1)
                    continue;
                const BigComplex lhs = (a * b).embed(e, 192);
                const BigComplex rhs = a.embed(e, 192) * b.embed(e, 192);
                const double scale = 1.0 + abs(lhs).to_double();
                ASSERT_LT(abs(lhs - rhs).to_double(), 1e-40 * scale);
                // conj embeds as the complex conjugate
                const BigComplex c = a.conj().embed(e, 192), d = a.embed(e, 192);
                ASSERT_LT(abs(c - BigComplex{d.re, -d.im}).to_double(), 1e-40 * (1.0 + abs(d).to_double()));
            }
        }
    }
}
