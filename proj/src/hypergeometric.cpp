#include "rigidcalc/hypergeometric.hpp"

#include "rigidcalc/errors.hpp"

namespace rigidcalc {

ExactMatrix companion_matrix(const std::vector<CycNumber>& coeffs)
{
    const std::size_t n = coeffs.size();
    long order = 1;
    for (const auto& c : coeffs)
        order = lcm_long(order, c.order());
    ExactMatrix out(n, n, order);
    for (std::size_t i = 1; i < n; ++i)
        out.set(i, i - 1, CycNumber(1));
    for (std::size_t i = 0; i < n; ++i)
        out.set(i, n - 1, -coeffs[i]);
    return out;
}

std::vector<CycNumber> polynomial_from_roots(const std::vector<CycNumber>& roots)
{
    // poly[k] is the coefficient of T^k, including the leading one.
    std::vector<CycNumber> poly{CycNumber(1)};
    for (const auto& root : roots) {
        std::vector<CycNumber> next(poly.size() + 1, CycNumber(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= root * poly[k];
        }
        poly = std::move(next);
    }
    poly.pop_back();
    return poly;
}

MonodromyTuple hypergeometric_tuple(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b, long order)
{
    if (a.empty() || b.empty())
        throw Error(ErrorCode::EmptyParameters, "hypergeometric parameters must be nonempty");
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "parameter lists have lengths " + std::to_string(a.size()) +
                                                      " and " + std::to_string(b.size()));
    for (const auto* list : {&a, &b})
        for (const auto& x : *list)
            if (x.is_zero() || !x.pow(order).is_one())
                throw Error(ErrorCode::NotRootOfUnity, x.to_string() + " is not in mu_" + std::to_string(order));
    const ExactMatrix at_inf = companion_matrix(polynomial_from_roots(a)).lift(order);
    const ExactMatrix bm = companion_matrix(polynomial_from_roots(b)).lift(order);
    // A_0 A_1 = B^{-1} B A^{-1} = A^{-1}, so the derived A_inf is exactly A.
    return MonodromyTuple::make(order, {Puncture::finite(0), Puncture::finite(1)},
                                {inverse(bm), bm * inverse(at_inf)});
}

MonodromyTuple hypergeometric_tuple(const std::vector<RootOfUnity>& a, const std::vector<RootOfUnity>& b, long order)
{
    auto convert = [order](const std::vector<RootOfUnity>& xs) {
        std::vector<CycNumber> out;
        for (const auto& x : xs)
            out.push_back(x.to_cyc(order));
        return out;
    };
    return hypergeometric_tuple(convert(a), convert(b), order);
}

MonodromyTuple from_multiplicity_function(const MultiplicityFunction& m, long order)
{
    std::vector<RootOfUnity> b;
    for (const auto& [zeta, mult] : m) {
        if (zeta == RootOfUnity::one())
            throw Error(ErrorCode::InvalidArgument, "1 is not allowed in the support of m");
        if (order % zeta.order() != 0)
            throw Error(ErrorCode::NotRootOfUnity, zeta.to_string() + " is not in mu_" + std::to_string(order));
        b.insert(b.end(), mult, zeta);
    }
    if (b.empty())
        throw Error(ErrorCode::EmptySupport, "multiplicity function has empty support");
    const std::vector<RootOfUnity> a(b.size(), RootOfUnity::one());
    return hypergeometric_tuple(a, b, order);
}

} // namespace rigidcalc
