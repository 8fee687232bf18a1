#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace rigidcalc {

/// Thin owning wrapper around an mpfr_t. Each value carries its own
/// precision; binary operations round to the larger of the two operand
/// precisions, so no process-wide default precision is consulted.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 128);
    BigFloat(double value, mpfr_prec_t bits);
    BigFloat(const mpq_class& value, mpfr_prec_t bits);
    BigFloat(const mpz_class& value, mpfr_prec_t bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    std::string to_string(int digits = 40) const;
    bool is_nan() const { return mpfr_nan_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    static BigFloat pi(mpfr_prec_t bits);

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat abs(const BigFloat& x);
    friend BigFloat sin(const BigFloat& x);
    friend BigFloat cos(const BigFloat& x);
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y);
    friend BigFloat ldexp(const BigFloat& x, long exponent);

private:
    void raise_precision(mpfr_prec_t bits);

    mpfr_t value_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
    BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);
    BigComplex& operator/=(const BigComplex& rhs);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
};

BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z); // |z|^2
/// exp(i * angle)
BigComplex unit_phase(const BigFloat& angle);

} // namespace rigidcalc
