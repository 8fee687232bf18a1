#include "rigidcalc/purity.hpp"

#include "rigidcalc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rigidcalc {

namespace {

bool is_prime_power(const mpz_class& q)
{
    if (q < 2)
        return false;
    const auto bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    for (unsigned long k = 1; k <= bits; ++k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0 && mpz_probab_prime_p(root.get_mpz_t(), 30) > 0)
            return true;
    }
    return false;
}

Rational q_to_w(const WeilPolynomial& p)
{
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), p.q.get_mpz_t(), static_cast<unsigned long>(std::labs(p.weight)));
    return p.weight >= 0 ? Rational(power) : Rational(1) / Rational(power);
}

// Q(z) and Q'(z) by Horner; coefficients constant term first.
void evaluate(const std::vector<BigComplex>& c, const BigComplex& z, BigComplex& value, BigComplex& derivative)
{
    const mpfr_prec_t prec = z.re.precision();
    value = c.back();
    derivative = BigComplex(prec);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        derivative = derivative * z + value;
        value = value * z + c[k];
    }
}

enum class RootStatus { Inside, Outside, Ambiguous };

// One embedding at one precision: approximate the roots by Aberth iteration,
// then enclose them in the disks D(z_i, n |W_i|) where W_i is the Weierstrass
// correction Q(z_i) / prod_{j != i} (z_i - z_j). Each connected union of k disks
// holds exactly k roots, so a cluster is decided by the range of |z| over it.
RootStatus classify_roots(const std::vector<BigComplex>& coeffs, const BigFloat& target, const BigFloat& tol,
                          mpfr_prec_t prec)
{
    const std::size_t n = coeffs.size() - 1;
    if (n == 0)
        return RootStatus::Inside;

    // Initial guesses on the circle of radius |Q(0)|^{1/n}, rotated off the axes.
    const double radius = std::pow(std::max(abs(coeffs[0]).to_double(), 1e-300), 1.0 / static_cast<double>(n));
    std::vector<BigComplex> z;
    for (std::size_t j = 0; j < n; ++j) {
        const double angle = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n) + 0.7;
        z.emplace_back(BigFloat(radius * std::cos(angle), prec), BigFloat(radius * std::sin(angle), prec));
    }

    const BigFloat eps = ldexp(BigFloat(1.0, prec), -static_cast<long>(prec) + 8);
    const long max_iterations = static_cast<long>(prec) * 2 + 200;
    BigComplex value(prec), derivative(prec);
    const BigComplex one(BigFloat(1.0, prec), BigFloat(prec));
    for (long iter = 0; iter < max_iterations; ++iter) {
        BigFloat largest_step(prec);
        for (std::size_t i = 0; i < n; ++i) {
            evaluate(coeffs, z[i], value, derivative);
            if (norm(value) <= BigFloat(prec))
                continue;
            if (norm(derivative) <= BigFloat(prec)) {
                z[i].re += eps;
                continue;
            }
            BigComplex ratio = value / derivative;
            BigComplex repulsion(prec);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    repulsion += one / (z[i] - z[j]);
            BigComplex step = ratio / (one - ratio * repulsion);
            z[i] -= step;
            const BigFloat size = abs(step) / (abs(z[i]) + BigFloat(1.0, prec));
            if (size > largest_step)
                largest_step = size;
        }
        if (!largest_step.is_finite())
            return RootStatus::Ambiguous;
        if (largest_step <= eps)
            break;
    }

    // Inclusion radii, padded by a bound on the rounding error of Horner.
    std::vector<BigFloat> radii;
    for (std::size_t i = 0; i < n; ++i) {
        evaluate(coeffs, z[i], value, derivative);
        BigFloat magnitude_sum(prec), power(1.0, prec);
        const BigFloat zabs = abs(z[i]);
        for (const auto& c : coeffs) {
            magnitude_sum += abs(c) * power;
            power *= zabs;
        }
        BigFloat residual = abs(value) + ldexp(magnitude_sum, -static_cast<long>(prec) + 4) *
                                             BigFloat(static_cast<double>(n + 1), prec);
        BigComplex denom(BigFloat(1.0, prec), BigFloat(prec));
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                denom *= z[i] - z[j];
        const BigFloat dabs = abs(denom);
        if (!(dabs > BigFloat(prec)) || !residual.is_finite())
            return RootStatus::Ambiguous;
        radii.push_back(BigFloat(static_cast<double>(n), prec) * residual / dabs);
    }

    // Clusters of overlapping disks.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (abs(z[i] - z[j]) <= radii[i] + radii[j])
                parent[find(i)] = find(j);

    const BigFloat upper = target * (BigFloat(1.0, prec) + tol);
    const BigFloat lower = target * (BigFloat(1.0, prec) - tol);
    bool ambiguous = false;
    for (std::size_t root = 0; root < n; ++root) {
        if (find(root) != root)
            continue;
        BigFloat lo(prec), hi(prec);
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (find(i) != root)
                continue;
            const BigFloat zabs = abs(z[i]);
            BigFloat a = zabs - radii[i];
            if (a < BigFloat(prec))
                a = BigFloat(prec);
            const BigFloat b = zabs + radii[i];
            if (first || a < lo)
                lo = a;
            if (first || b > hi)
                hi = b;
            first = false;
        }
        const BigFloat lo2 = lo * lo, hi2 = hi * hi;
        if (lo2 > upper || hi2 < lower)
            return RootStatus::Outside;
        if (!(hi2 <= upper && lo2 >= lower))
            ambiguous = true;
    }
    return ambiguous ? RootStatus::Ambiguous : RootStatus::Inside;
}

} // namespace

long WeilPolynomial::order() const
{
    long order = 1;
    for (const auto& c : coeffs)
        order = lcm_long(order, c.order());
    return order;
}

void WeilPolynomial::validate() const
{
    if (coeffs.empty() || !coeffs.back().is_one())
        throw Error(ErrorCode::InvalidArgument, "Weil polynomial must be monic");
    if (!is_prime_power(q))
        throw Error(ErrorCode::InvalidArgument, "q = " + q.get_str() + " is not a prime power >= 2");
    if (coeffs.front().is_zero())
        throw Error(ErrorCode::ZeroConstantTerm, "Q(0) = 0");
}

WeilPolynomial make_weil_polynomial(const std::vector<long>& coeffs, long q, long weight)
{
    WeilPolynomial p;
    for (long c : coeffs)
        p.coeffs.emplace_back(c);
    p.q = q;
    p.weight = weight;
    return p;
}

bool functional_equation_check(const WeilPolynomial& p)
{
    p.validate();
    const std::size_t n = p.degree();
    const Rational qw = q_to_w(p);
    const CycNumber inv_constant = p.coeffs.front().inverse();
    // Coefficient of X^j in X^n Q(q^w / X) / Q(0) is c_{n-j} (q^w)^{n-j} / c_0.
    Rational scale = 1;
    std::vector<Rational> powers(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        powers[k] = scale;
        scale *= qw;
    }
    for (std::size_t j = 0; j <= n; ++j) {
        const CycNumber rhs = p.coeffs[n - j] * CycNumber(powers[n - j]) * inv_constant;
        if (!(p.coeffs[j].conj() == rhs))
            return false;
    }
    return true;
}

bool magnitude_check(const WeilPolynomial& p, double tolerance, long bits)
{
    p.validate();
    if (!(tolerance > 0))
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    const long order = p.order();
    const Rational qw = q_to_w(p);
    constexpr long max_bits = 4096;
    bits = std::max(bits, 128L);
    for (long a = 1; a <= order; ++a) {
        if (gcd_long(a, order) != 1)
            continue;
        RootStatus status = RootStatus::Ambiguous;
        for (long prec = bits; prec <= max_bits && status == RootStatus::Ambiguous; prec *= 2) {
            std::vector<BigComplex> embedded;
            for (const auto& c : p.coeffs)
                embedded.push_back(c.lift(order).embed(a, prec));
            status = classify_roots(embedded, BigFloat(qw, prec), BigFloat(tolerance, prec), prec);
        }
        if (status == RootStatus::Ambiguous)
            throw Error(ErrorCode::RootFindingFailure,
                        "roots not certified within " + std::to_string(max_bits) + " bits for embedding a=" +
                            std::to_string(a));
        if (status == RootStatus::Outside)
            return false;
    }
    return true;
}

std::string to_string(WeilVerdict verdict)
{
    switch (verdict) {
    case WeilVerdict::Pass: return "Pass";
    case WeilVerdict::FailFunctionalEquation: return "FailFunctionalEquation";
    case WeilVerdict::FailMagnitude: return "FailMagnitude";
    }
    return "Unknown";
}

WeilVerdict weil_check(const WeilPolynomial& p, double tolerance, long bits)
{
    if (!functional_equation_check(p))
        return WeilVerdict::FailFunctionalEquation;
    if (!magnitude_check(p, tolerance, bits))
        return WeilVerdict::FailMagnitude;
    return WeilVerdict::Pass;
}

HodgeMultiset::HodgeMultiset(std::vector<long> v, long w) : values(std::move(v)), weight(w)
{
    if (values.empty())
        throw Error(ErrorCode::InvalidArgument, "Hodge multiset must be nonempty");
    std::sort(values.begin(), values.end());
}

HodgeMultiset hodge_conjugate_dual(const HodgeMultiset& h)
{
    std::vector<long> out;
    out.reserve(h.values.size());
    for (long x : h.values)
        out.push_back(h.weight - x);
    return {std::move(out), h.weight};
}

bool hodge_is_regular(const HodgeMultiset& h)
{
    return std::adjacent_find(h.values.begin(), h.values.end()) == h.values.end();
}

} // namespace rigidcalc
