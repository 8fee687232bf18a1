#pragma once

#include "rigidcalc/cyclotomic.hpp"

#include <string>
#include <vector>

namespace rigidcalc {

/// Characteristic polynomial of a Frobenius element together with the size
/// q of the residue field and the weight w.
struct WeilPolynomial {
    /// Constant term first; the last coefficient must be 1.
    std::vector<CycNumber> coeffs;
    mpz_class q;
    long weight = 0;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    long order() const;
    /// Throws InvalidArgument (not monic, q not a prime power >= 2) or
    /// ZeroConstantTerm.
    void validate() const;
};

/// Convenience for integer polynomials, constant term first.
WeilPolynomial make_weil_polynomial(const std::vector<long>& coeffs, long q, long weight);

/// conj(Q)(X) == X^n Q(q^w / X) / Q(0), checked coefficient by coefficient.
bool functional_equation_check(const WeilPolynomial& p);

/// Every root, under every embedding of Q(zeta_N), satisfies
/// | |alpha|^2 - q^w | <= tolerance * q^w. Roots come from Aberth iteration
/// with Gershgorin-type inclusion disks; precision starts at `bits` and
/// doubles up to 4096 before RootFindingFailure is raised.
bool magnitude_check(const WeilPolynomial& p, double tolerance = 1e-20, long bits = 256);

enum class WeilVerdict { Pass, FailFunctionalEquation, FailMagnitude };

std::string to_string(WeilVerdict verdict);

WeilVerdict weil_check(const WeilPolynomial& p, double tolerance = 1e-20, long bits = 256);

/// Multiset of Hodge-Tate numbers with its weight. Values are kept sorted.
struct HodgeMultiset {
    std::vector<long> values;
    long weight = 0;

    HodgeMultiset() = default;
    HodgeMultiset(std::vector<long> values, long weight);

    friend bool operator==(const HodgeMultiset&, const HodgeMultiset&) = default;
};

/// {w - h : h in H}.
HodgeMultiset hodge_conjugate_dual(const HodgeMultiset& h);
/// Every value has multiplicity one.
bool hodge_is_regular(const HodgeMultiset& h);

} // namespace rigidcalc
