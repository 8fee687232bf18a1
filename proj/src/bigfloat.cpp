#include "rigidcalc/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace rigidcalc {

BigFloat::BigFloat(mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, mpfr_prec_t bits)
{
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    // Steal the limbs and leave `other` as a valid minimal-precision zero.
    *value_ = *other.value_;
    mpfr_init2(other.value_, MPFR_PREC_MIN);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    if (this != &other)
        mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat()
{
    if (value_->_mpfr_d != nullptr)
        mpfr_clear(value_);
}

std::string BigFloat::to_string(int digits) const
{
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, value_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

BigFloat BigFloat::pi(mpfr_prec_t bits)
{
    BigFloat out(bits);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
}

void BigFloat::raise_precision(mpfr_prec_t bits)
{
    if (bits > precision())
        mpfr_prec_round(value_, bits, MPFR_RNDN);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs)
{
    raise_precision(rhs.precision());
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs)
{
    raise_precision(rhs.precision());
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs)
{
    raise_precision(rhs.precision());
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs)
{
    raise_precision(rhs.precision());
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const
{
    BigFloat out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& x)
{
    BigFloat out(x.precision());
    mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x)
{
    BigFloat out(x.precision());
    mpfr_abs(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat sin(const BigFloat& x)
{
    BigFloat out(x.precision());
    mpfr_sin(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat cos(const BigFloat& x)
{
    BigFloat out(x.precision());
    mpfr_cos(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y)
{
    BigFloat out(std::max(x.precision(), y.precision()));
    mpfr_hypot(out.value_, x.value_, y.value_, MPFR_RNDN);
    return out;
}

BigFloat ldexp(const BigFloat& x, long exponent)
{
    BigFloat out(x.precision());
    mpfr_mul_2si(out.value_, x.value_, exponent, MPFR_RNDN);
    return out;
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs)
{
    re += rhs.re;
    im += rhs.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs)
{
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs)
{
    BigFloat real = re * rhs.re - im * rhs.im;
    BigFloat imag = re * rhs.im + im * rhs.re;
    re = std::move(real);
    im = std::move(imag);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs)
{
    BigFloat denom = rhs.re * rhs.re + rhs.im * rhs.im;
    BigFloat real = (re * rhs.re + im * rhs.im) / denom;
    BigFloat imag = (im * rhs.re - re * rhs.im) / denom;
    re = std::move(real);
    im = std::move(imag);
    return *this;
}

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigComplex unit_phase(const BigFloat& angle) { return {cos(angle), sin(angle)}; }

} // namespace rigidcalc
