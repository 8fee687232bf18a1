#pragma once

#include "rigidcalc/bigfloat.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rigidcalc {

/// Exact rational number. gmpxx keeps it canonical (coprime, positive
/// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed once per n by dividing X^n - 1 by the lower cyclotomic
/// polynomials and cached for the lifetime of the process.
const std::vector<Rational>& cyclotomic_polynomial(long n);

namespace detail {
struct CyclotomicField;
const CyclotomicField& field_for(long order);
} // namespace detail

/// Element of Q(zeta_N), stored as the reduced remainder modulo Phi_N in the
/// power basis 1, zeta, ..., zeta^{phi(N)-1}. The representation is unique, so
/// equality within one order is coefficient comparison. Operands of different
/// orders are lifted to the lcm of their orders before combining.
class CycNumber {
public:
    CycNumber();
    CycNumber(long value);  // NOLINT(google-explicit-constructor)
    explicit CycNumber(const Rational& value, long order = 1);

    /// Reduce an arbitrary combination sum raw[k] zeta^k (k < N) modulo Phi_N.
    static CycNumber normalize(std::span<const Rational> raw, long order);
    /// zeta_N^power with zeta_N = exp(2 pi i / N).
    static CycNumber zeta(long order, long power = 1);

    long order() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Value as a rational; only meaningful when is_rational().
    Rational rational_part() const { return coeffs_.front(); }

    /// Same number viewed in Q(zeta_target); target must be a multiple of order().
    CycNumber lift(long target) const;

    CycNumber inverse() const;
    CycNumber pow(long exponent) const;
    /// Complex conjugation zeta -> zeta^{N-1}.
    CycNumber conj() const;

    /// Value under zeta -> exp(2 pi i a / N), evaluated with `bits` of binary
    /// precision (at least 128). Requires gcd(a, N) = 1.
    BigComplex embed(long a, mpfr_prec_t bits = 128) const;

    /// Least common denominator of the coefficients.
    mpz_class denominator() const;

    std::string to_string() const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& rhs);
    CycNumber& operator-=(const CycNumber& rhs);
    CycNumber& operator*=(const CycNumber& rhs);
    CycNumber& operator/=(const CycNumber& rhs);

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
    friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
    friend bool operator==(const CycNumber& a, const CycNumber& b);

private:
    CycNumber(const detail::CyclotomicField* field, std::vector<Rational> coeffs);
    void align_with(CycNumber& other);

    const detail::CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

/// A root of unity exp(2 pi i num / den), kept with 0 <= num < den and
/// gcd(num, den) = 1. Ordered by angle, so 1 sorts before -1.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(long num, long den);

    static RootOfUnity one() { return {0, 1}; }
    static RootOfUnity minus_one() { return {1, 2}; }

    long numerator() const { return num_; }
    /// Exact multiplicative order.
    long order() const { return den_; }

    RootOfUnity inverse() const { return {den_ - num_, den_}; }
    RootOfUnity operator*(const RootOfUnity& rhs) const;

    CycNumber to_cyc(long field_order) const;
    CycNumber to_cyc() const { return to_cyc(den_); }

    /// "1", "-1", "zeta3", "zeta3^2", ...
    std::string to_string() const;
    /// Accepts "1", "-1", "zetaN", "zetaN^k" (k may be negative).
    static RootOfUnity parse(std::string_view text);
    /// Recognize x as zeta_M^k for some M dividing `search_order`, if it is one.
    static bool recognize(const CycNumber& x, long search_order, RootOfUnity& out);

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b);

private:
    long num_ = 0;
    long den_ = 1;
};

} // namespace rigidcalc
