#include "rigidcalc/errors.hpp"
#include "rigidcalc/purity.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <random>

using namespace rigidcalc;

namespace {

WeilPolynomial poly(std::vector<long> coeffs, long q, long w) { return make_weil_polynomial(coeffs, q, w); }

// Monic product of (X - root), constant term first.
std::vector<CycNumber> expand(const std::vector<CycNumber>& roots)
{
    std::vector<CycNumber> p{CycNumber(1L)};
    for (const auto& root : roots) {
        std::vector<CycNumber> next(p.size() + 1, CycNumber(0L));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= root * p[i];
        }
        p = std::move(next);
    }
    return p;
}

// X^n conj(Q)(q^w / X) / conj(Q)(0)
std::vector<CycNumber> reciprocal_transform(const WeilPolynomial& p)
{
    const std::size_t n = p.degree();
    const CycNumber qw{Rational(p.q)};
    std::vector<CycNumber> out(n + 1, CycNumber(0L));
    CycNumber scale(1L);
    for (std::size_t k = 0; k <= n; ++k) {
        out[n - k] = p.coeffs[k].conj() * scale;
        for (long j = 0; j < p.weight; ++j)
            scale *= qw;
    }
    const CycNumber lead = p.coeffs[0].conj();
    for (auto& c : out)
        c /= lead;
    return out;
}

} // namespace

TEST(FunctionalEquation, Examples)
{
    EXPECT_TRUE(functional_equation_check(poly({-5, 1}, 5, 2)));
    EXPECT_TRUE(functional_equation_check(poly({5, 0, 1}, 5, 1)));
    // roots 1 and 2 are exchanged by alpha -> 2 / alpha, so the equation holds
    EXPECT_TRUE(functional_equation_check(poly({2, -3, 1}, 2, 1)));
    // X - 5 at q = 5, w = 1: the transformed polynomial is X - 1
    EXPECT_FALSE(functional_equation_check(poly({-5, 1}, 5, 1)));
    EXPECT_FALSE(functional_equation_check(poly({1, 1, 1}, 2, 1)));
}

TEST(Magnitude, Examples)
{
    EXPECT_TRUE(magnitude_check(poly({-5, 1}, 5, 2), 1e-20));
    EXPECT_FALSE(magnitude_check(poly({2, -3, 1}, 2, 1), 1e-20));
}

TEST(WeilCheck, Verdicts)
{
    EXPECT_EQ(weil_check(poly({5, 0, 1}, 5, 1)), WeilVerdict::Pass);
    EXPECT_EQ(weil_check(poly({2, -3, 1}, 2, 1)), WeilVerdict::FailMagnitude);
    // X - 5 with q = 5, w = 1: the reciprocal polynomial is X - 1, so the
    // exact stage already fails and is the one reported.
    EXPECT_EQ(weil_check(poly({-5, 1}, 5, 1)), WeilVerdict::FailFunctionalEquation);
    EXPECT_FALSE(magnitude_check(poly({-5, 1}, 5, 1)));
    EXPECT_EQ(to_string(WeilVerdict::FailMagnitude), "FailMagnitude");
}

TEST(WeilCheck, MagnitudeStageCatchesWhatTheEquationMisses)
{
    // (X - 4)(X - 1) at q^w = 4: the roots are swapped by alpha -> 4/alpha,
    // so the equation holds, but neither has absolute value 2.
    EXPECT_TRUE(functional_equation_check(poly({4, -5, 1}, 2, 2)));
    EXPECT_EQ(weil_check(poly({4, -5, 1}, 2, 2)), WeilVerdict::FailMagnitude);
}

TEST(WeilPolynomialTest, Validation)
{
    auto code = [](const WeilPolynomial& p) -> std::optional<ErrorCode> {
        try {
            p.validate();
        } catch (const Error& e) {
            return e.code();
        }
        return std::nullopt;
    };
    EXPECT_EQ(code(poly({0, 1}, 5, 1)), ErrorCode::ZeroConstantTerm);
    EXPECT_EQ(code(poly({1, 2}, 5, 1)), ErrorCode::InvalidArgument);
    EXPECT_EQ(code(poly({1, 1}, 6, 1)), ErrorCode::InvalidArgument);
    EXPECT_EQ(code(poly({1, 1}, 1, 1)), ErrorCode::InvalidArgument);
    EXPECT_THROW(functional_equation_check(poly({0, 0, 1}, 5, 1)), Error);
    // prime powers are fine
    EXPECT_NO_THROW(poly({9, 0, 1}, 9, 1).validate());
}

TEST(PurityProperty, EllipticCurveCorpus)
{
    for (long p : {3L, 5L, 7L, 11L}) {
        const long a = oracle::elliptic_trace(p);
        EXPECT_LE(a * a, 4 * p);
        EXPECT_EQ(weil_check(poly({p, -a, 1}, p, 1), 1e-20), WeilVerdict::Pass) << "p=" << p;
    }
    EXPECT_EQ(oracle::elliptic_trace(5), 2);
    EXPECT_EQ(oracle::elliptic_trace(3), 0);
}

TEST(PurityProperty, ProductsOfWeilLinearFactors)
{
    std::mt19937_64 rng(401);
    std::uniform_int_distribution<long> pick_order(1, 12), pick_q(0, 3), pick_half_weight(0, 2);
    std::uniform_int_distribution<std::size_t> pick_degree(1, 5);
    const long qs[] = {2, 3, 4, 5};
    for (int trial = 0; trial < 100; ++trial) {
        const long order = pick_order(rng);
        const long q = qs[pick_q(rng)];
        const long half = pick_half_weight(rng);
        long scale = 1;
        for (long j = 0; j < half; ++j)
            scale *= q;
        std::uniform_int_distribution<long> power(0, order - 1);
        std::vector<CycNumber> roots;
        const std::size_t degree = pick_degree(rng);
        for (std::size_t k = 0; k < degree; ++k)
            roots.push_back(CycNumber::zeta(order, power(rng)) * CycNumber(scale));
        WeilPolynomial p;
        p.coeffs = expand(roots);
        p.q = q;
        p.weight = 2 * half;
        ASSERT_EQ(weil_check(p), WeilVerdict::Pass) << "trial " << trial;
        // the conjugate-reciprocal transform fixes a passing polynomial
        const auto transformed = reciprocal_transform(p);
        for (std::size_t k = 0; k < transformed.size(); ++k)
            ASSERT_EQ(transformed[k], p.coeffs[k]);
    }
}

TEST(PurityProperty, PerturbedRootFails)
{
    // Moving one Frobenius root alpha to alpha + 1 leaves its partner
    // q / conj(alpha) behind, so the result is no longer a Weil polynomial.
    for (long p : {3L, 5L, 7L, 11L}) {
        const long a = oracle::elliptic_trace(p);
        const CycNumber alpha = oracle::frobenius_root(a, p);
        WeilPolynomial exact;
        exact.coeffs = expand({alpha, alpha.conj()});
        exact.q = p;
        exact.weight = 1;
        ASSERT_EQ(exact.coeffs, (std::vector<CycNumber>{p, -a, 1L}));
        EXPECT_EQ(weil_check(exact), WeilVerdict::Pass);
        WeilPolynomial moved = exact;
        moved.coeffs = expand({alpha + CycNumber(1L), alpha.conj()});
        EXPECT_NE(weil_check(moved), WeilVerdict::Pass) << "p=" << p;
    }
}

TEST(PurityProperty, IntegerShiftOfTheTraceIsStillWeil)
{
    // X^2 - (a+1)X + p has |a+1| < 2 sqrt(p) for these p, so its roots are
    // complex conjugates of absolute value sqrt(p): a Weil polynomial.
    for (long p : {3L, 5L, 7L, 11L}) {
        const long a = oracle::elliptic_trace(p) + 1;
        ASSERT_LT(a * a, 4 * p);
        EXPECT_EQ(weil_check(poly({p, -a, 1}, p, 1)), WeilVerdict::Pass);
    }
}

TEST(Hodge, ConjugateDual)
{
    EXPECT_EQ(hodge_conjugate_dual(HodgeMultiset({0, 1}, 3)), HodgeMultiset({2, 3}, 3));
    EXPECT_EQ(hodge_conjugate_dual(HodgeMultiset({0, 3}, 3)), HodgeMultiset({0, 3}, 3));
    EXPECT_EQ(hodge_conjugate_dual(HodgeMultiset({0, 1, 2}, 2)), HodgeMultiset({0, 1, 2}, 2));
    EXPECT_THROW(HodgeMultiset({}, 1), Error);
}

TEST(Hodge, Regularity)
{
    EXPECT_TRUE(hodge_is_regular(HodgeMultiset({0, 1, 2}, 2)));
    EXPECT_FALSE(hodge_is_regular(HodgeMultiset({0, 0, 1}, 2)));
    EXPECT_TRUE(hodge_is_regular(HodgeMultiset({5}, 0)));
}

TEST(HodgeProperty, DualIsAnInvolution)
{
    std::mt19937_64 rng(402);
    std::uniform_int_distribution<long> value(-4, 8), weight(-3, 9);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<long> values(size(rng));
        for (auto& v : values)
            v = value(rng);
        const HodgeMultiset h(values, weight(rng));
        const HodgeMultiset d = hodge_conjugate_dual(h);
        ASSERT_EQ(hodge_conjugate_dual(d), h);
        ASSERT_EQ(d.values.size(), h.values.size());
        ASSERT_EQ(hodge_is_regular(d), hodge_is_regular(h));
    }
}
