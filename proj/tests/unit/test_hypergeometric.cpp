#include "rigidcalc/errors.hpp"
#include "rigidcalc/hypergeometric.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace rigidcalc;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

JordanBlock block(RootOfUnity z, std::size_t size, std::size_t mult = 1) { return {z, size, mult}; }

std::size_t defect_at_one(const MonodromyTuple& t)
{
    const ExactMatrix& a1 = t.matrices()[1];
    return rank(a1 - ExactMatrix::identity(t.rank(), t.order()));
}

MultiplicityFunction random_multiplicity(std::mt19937_64& rng, long& order)
{
    std::uniform_int_distribution<long> pick_order(2, 12);
    order = pick_order(rng);
    std::uniform_int_distribution<long> pick_power(1, order - 1);
    std::uniform_int_distribution<std::size_t> pick_total(1, 6);
    const std::size_t total = pick_total(rng);
    MultiplicityFunction m;
    for (std::size_t k = 0; k < total; ++k)
        ++m[RootOfUnity(pick_power(rng), order)];
    return m;
}

} // namespace

TEST(Companion, Convention)
{
    // T^2 - 2T + 1
    EXPECT_EQ(companion_matrix({1L, -2L}), ExactMatrix::from_rows({{0, -1}, {1, 2}}));
    EXPECT_EQ(polynomial_from_roots({CycNumber::zeta(3), CycNumber::zeta(3, 2)}),
              (std::vector<CycNumber>{1L, 1L}));
}

TEST(Hypergeometric, RankOne)
{
    const auto t = hypergeometric_tuple({RootOfUnity::one()}, {RootOfUnity::minus_one()}, 2);
    EXPECT_EQ(t.matrices()[0], ExactMatrix::from_rows({{-1}}));
    EXPECT_EQ(t.matrices()[1], ExactMatrix::from_rows({{-1}}));
    EXPECT_EQ(t.at_infinity(), ExactMatrix::from_rows({{1}}));
}

TEST(Hypergeometric, ThirdRootsOfUnity)
{
    const auto t = hypergeometric_tuple({RootOfUnity::one(), RootOfUnity::one()},
                                        {RootOfUnity(1, 3), RootOfUnity(2, 3)}, 3);
    EXPECT_EQ(t.rank(), 2u);
    EXPECT_EQ(jordan_type(t.at_infinity(), 3), JordanType({block(RootOfUnity::one(), 2)}));
    EXPECT_EQ(jordan_type(t.matrices()[0], 3),
              JordanType({block(RootOfUnity(1, 3).inverse(), 1), block(RootOfUnity(2, 3).inverse(), 1)}));
    EXPECT_EQ(defect_at_one(t), 1u);
}

TEST(Hypergeometric, SharedParameterIsReducible)
{
    const auto t = hypergeometric_tuple({RootOfUnity::one(), RootOfUnity::minus_one()},
                                        {RootOfUnity::one(), RootOfUnity(1, 4)}, 4);
    EXPECT_FALSE(is_absolutely_irreducible(t));
}

TEST(Hypergeometric, Errors)
{
    EXPECT_EQ(code_of([] { hypergeometric_tuple(std::vector<RootOfUnity>{}, std::vector<RootOfUnity>{}, 2); }),
              ErrorCode::EmptyParameters);
    EXPECT_EQ(code_of([] { hypergeometric_tuple({RootOfUnity::one()}, {RootOfUnity(1, 3), RootOfUnity(2, 3)}, 3); }),
              ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { hypergeometric_tuple({RootOfUnity::one()}, {RootOfUnity(1, 3)}, 2); }),
              ErrorCode::NotRootOfUnity);
    EXPECT_EQ(code_of([] { hypergeometric_tuple(std::vector<CycNumber>{1L}, std::vector<CycNumber>{2L}, 2); }),
              ErrorCode::NotRootOfUnity);
}

TEST(Multiplicity, Examples)
{
    const auto t = from_multiplicity_function({{RootOfUnity::minus_one(), 3}}, 2);
    EXPECT_EQ(t.rank(), 3u);
    EXPECT_EQ(jordan_type(t.matrices()[0], 2), JordanType({block(RootOfUnity::minus_one(), 3)}));
    EXPECT_EQ(jordan_type(t.at_infinity(), 2).notation(), "U(3)");
    EXPECT_EQ(from_multiplicity_function({{RootOfUnity(1, 3), 1}, {RootOfUnity(2, 3), 1}}, 3).rank(), 2u);
    EXPECT_EQ(code_of([] { from_multiplicity_function({}, 3); }), ErrorCode::EmptySupport);
    EXPECT_EQ(code_of([] { from_multiplicity_function({{RootOfUnity::one(), 1}}, 3); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { from_multiplicity_function({{RootOfUnity(1, 5), 1}}, 3); }), ErrorCode::NotRootOfUnity);
}

TEST(HypergeometricProperty, RandomMultiplicityFunctions)
{
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 50; ++trial) {
        long order = 0;
        const MultiplicityFunction m = random_multiplicity(rng, order);
        std::size_t total = 0;
        std::vector<JordanBlock> expected_at_zero;
        for (const auto& [zeta, mult] : m) {
            total += mult;
            expected_at_zero.push_back(block(zeta.inverse(), mult));
        }
        const auto t = from_multiplicity_function(m, order);
        ASSERT_EQ(t.rank(), total);
        EXPECT_EQ(jordan_type(t.at_infinity(), order), JordanType({block(RootOfUnity::one(), total)}));
        EXPECT_EQ(jordan_type(t.matrices()[0], order), JordanType(expected_at_zero));
        EXPECT_LE(defect_at_one(t), 1u);
        EXPECT_EQ(rigidity_index(t), 2);
        EXPECT_TRUE(is_absolutely_irreducible(t));
        // rank one reports the first finite puncture, like any rank-one tuple
        const Puncture witness = total == 1 ? Puncture::finite(0) : Puncture::infinity();
        EXPECT_EQ(is_somewhere_maximal(t), witness);
        EXPECT_EQ(certify_regular(t).to_string(), "RegularViaLemma(" + witness.label() + ")");
        EXPECT_EQ(determinant(t.at_infinity()) * determinant(t.matrices()[0]) * determinant(t.matrices()[1]),
                  CycNumber(1L));
    }
}

TEST(HypergeometricProperty, DisjointParametersGiveRigidIrreducibleTuples)
{
    std::mt19937_64 rng(302);
    std::uniform_int_distribution<long> power(0, 11);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    int checked = 0;
    while (checked < 30) {
        const std::size_t n = dim(rng);
        std::vector<RootOfUnity> a, b;
        for (std::size_t k = 0; k < n; ++k) {
            a.emplace_back(power(rng), 12);
            b.emplace_back(power(rng), 12);
        }
        bool disjoint = true;
        for (const auto& x : a)
            for (const auto& y : b)
                disjoint = disjoint && !(x == y);
        const auto t = hypergeometric_tuple(a, b, 12);
        EXPECT_LE(defect_at_one(t), 1u);
        EXPECT_EQ(determinant(t.at_infinity()) * determinant(t.matrices()[0]) * determinant(t.matrices()[1]),
                  CycNumber(1L));
        if (!disjoint)
            continue;
        EXPECT_TRUE(is_absolutely_irreducible(t));
        EXPECT_EQ(rigidity_index(t), 2);
        ++checked;
    }
}
