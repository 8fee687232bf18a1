#include "rigidcalc/cyclotomic.hpp"

#include "rigidcalc/errors.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace rigidcalc {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    if (!s.empty() && s.front() == '+')
        s.erase(s.begin());
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-')
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-')
        throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational out(n, d);
    out.canonicalize();
    return out;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n)
{
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
}

bool is_zero_poly(const Poly& p) { return p.size() == 1 && p[0] == 0; }

// Long division; divisor must be nonzero and trimmed.
void poly_divmod(Poly num, const Poly& den, Poly& quot, Poly& rem)
{
    trim(num);
    if (num.size() < den.size()) {
        quot = Poly{Rational(0)};
        rem = num;
        return;
    }
    quot.assign(num.size() - den.size() + 1, Rational(0));
    const Rational& lead = den.back();
    for (std::size_t i = num.size(); i-- >= den.size();) {
        Rational factor = num[i] / lead;
        if (factor == 0)
            continue;
        std::size_t shift = i - (den.size() - 1);
        quot[shift] = factor;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[shift + j] -= factor * den[j];
    }
    num.resize(den.size() - 1 == 0 ? 1 : den.size() - 1);
    rem = num;
    trim(rem);
    trim(quot);
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    trim(out);
    return out;
}

std::mutex& cyclo_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

namespace detail {

struct CyclotomicField {
    long order = 1;
    long degree = 1;
    Poly modulus;
    // X^k mod Phi_N for 0 <= k < N, each of length `degree`.
    std::vector<Poly> powers;
};

namespace {

Poly cyclotomic_unlocked(long n, std::map<long, Poly>& cache)
{
    if (auto it = cache.find(n); it != cache.end())
        return it->second;
    Poly p(static_cast<std::size_t>(n) + 1, Rational(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        Poly q, r;
        poly_divmod(p, cyclotomic_unlocked(d, cache), q, r);
        p = q;
    }
    cache.emplace(n, p);
    return p;
}

std::map<long, Poly>& polynomial_cache()
{
    static std::map<long, Poly> cache;
    return cache;
}

} // namespace

const CyclotomicField& field_for(long order)
{
    if (order < 1)
        throw Error(ErrorCode::InvalidOrder, "cyclotomic order must be >= 1, got " + std::to_string(order));
    thread_local std::map<long, const CyclotomicField*> local;
    if (auto it = local.find(order); it != local.end())
        return *it->second;
    static std::map<long, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard lock(cyclo_mutex());
    if (auto it = fields.find(order); it != fields.end()) {
        local.emplace(order, it->second.get());
        return *it->second;
    }

    auto field = std::make_unique<CyclotomicField>();
    field->order = order;
    field->modulus = cyclotomic_unlocked(order, polynomial_cache());
    field->degree = static_cast<long>(field->modulus.size()) - 1;
    const auto deg = static_cast<std::size_t>(field->degree);
    Poly current(deg, Rational(0));
    current[0] = 1;
    for (long k = 0; k < order; ++k) {
        field->powers.push_back(current);
        // multiply by X and reduce with the monic modulus
        Rational carry = current[deg - 1];
        for (std::size_t j = deg - 1; j > 0; --j)
            current[j] = current[j - 1];
        current[0] = 0;
        if (carry != 0)
            for (std::size_t j = 0; j < deg; ++j)
                current[j] -= carry * field->modulus[j];
    }
    auto* raw = field.get();
    fields.emplace(order, std::move(field));
    local.emplace(order, raw);
    return *raw;
}

} // namespace detail

const std::vector<Rational>& cyclotomic_polynomial(long n) { return detail::field_for(n).modulus; }

// -- CycNumber ---------------------------------------------------------------

CycNumber::CycNumber() : CycNumber(Rational(0), 1) {}

CycNumber::CycNumber(long value) : CycNumber(Rational(value), 1) {}

CycNumber::CycNumber(const Rational& value, long order) : field_(&detail::field_for(order))
{
    coeffs_.assign(static_cast<std::size_t>(field_->degree), Rational(0));
    coeffs_[0] = value;
    coeffs_[0].canonicalize(); // gmp arithmetic assumes canonical operands
}

CycNumber::CycNumber(const detail::CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs))
{
}

long CycNumber::order() const { return field_->order; }

CycNumber CycNumber::normalize(std::span<const Rational> raw, long order)
{
    const auto& field = detail::field_for(order);
    if (raw.size() != static_cast<std::size_t>(order))
        throw Error(ErrorCode::DimensionMismatch,
                    "raw coefficient count " + std::to_string(raw.size()) + " != order " + std::to_string(order));
    std::vector<Rational> out(static_cast<std::size_t>(field.degree), Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        Rational c = raw[k];
        c.canonicalize();
        if (c == 0)
            continue;
        const auto& p = field.powers[k];
        for (std::size_t j = 0; j < out.size(); ++j)
            if (p[j] != 0)
                out[j] += c * p[j];
    }
    return CycNumber(&field, std::move(out));
}

CycNumber CycNumber::zeta(long order, long power)
{
    const auto& field = detail::field_for(order);
    long k = ((power % order) + order) % order;
    return CycNumber(&field, field.powers[static_cast<std::size_t>(k)]);
}

bool CycNumber::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycNumber::is_rational() const
{
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            return false;
    return true;
}

bool CycNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

CycNumber CycNumber::lift(long target) const
{
    const long n = order();
    if (target == n)
        return *this;
    if (target % n != 0)
        throw Error(ErrorCode::InvalidOrder,
                    "cannot lift order " + std::to_string(n) + " to " + std::to_string(target));
    const long step = target / n;
    if (is_rational())
        return CycNumber(coeffs_[0], target);
    std::vector<Rational> raw(static_cast<std::size_t>(target), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        raw[static_cast<std::size_t>((static_cast<long>(k) * step) % target)] += coeffs_[k];
    return normalize(raw, target);
}

void CycNumber::align_with(CycNumber& other)
{
    if (field_ == other.field_)
        return;
    const long target = lcm_long(order(), other.order());
    *this = lift(target);
    other = other.lift(target);
}

CycNumber CycNumber::operator-() const
{
    CycNumber out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs)
{
    if (field_ != rhs.field_) {
        CycNumber other = rhs;
        align_with(other);
        return *this += other;
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs)
{
    if (field_ != rhs.field_) {
        CycNumber other = rhs;
        align_with(other);
        return *this -= other;
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs)
{
    if (field_ != rhs.field_) {
        CycNumber other = rhs;
        align_with(other);
        return *this *= other;
    }
    const std::size_t deg = coeffs_.size();
    if (rhs.is_rational()) {
        const Rational s = rhs.coeffs_[0];
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }
    if (is_rational()) {
        const Rational s = coeffs_[0];
        coeffs_ = rhs.coeffs_;
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }
    std::vector<Rational> raw(2 * deg - 1, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (rhs.coeffs_[j] != 0)
                raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    std::vector<Rational> out(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(deg));
    const auto n = static_cast<std::size_t>(field_->order);
    for (std::size_t k = deg; k < raw.size(); ++k) {
        if (raw[k] == 0)
            continue;
        const auto& p = field_->powers[k % n];
        for (std::size_t j = 0; j < deg; ++j)
            if (p[j] != 0)
                out[j] += raw[k] * p[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& rhs) { return *this *= rhs.inverse(); }

CycNumber CycNumber::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::SingularMatrix, "division by zero in Q(zeta_" + std::to_string(order()) + ")");
    if (is_rational())
        return CycNumber(field_, [&] {
            std::vector<Rational> out(coeffs_.size(), Rational(0));
            out[0] = 1 / coeffs_[0];
            return out;
        }());
    // Extended Euclid: find s with s * x = 1 mod Phi_N.
    Poly r0 = field_->modulus, r1 = coeffs_;
    trim(r1);
    Poly s0{Rational(0)}, s1{Rational(1)};
    while (!is_zero_poly(r1)) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant because Phi_N is irreducible.
    const Rational c = r0[0];
    Poly q, rem;
    poly_divmod(s0, field_->modulus, q, rem);
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    for (std::size_t j = 0; j < rem.size() && j < out.size(); ++j)
        out[j] = rem[j] / c;
    return CycNumber(field_, std::move(out));
}

CycNumber CycNumber::pow(long exponent) const
{
    CycNumber base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    CycNumber result(Rational(1), order());
    while (e != 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e != 0)
            base *= base;
    }
    return result;
}

CycNumber CycNumber::conj() const
{
    const long n = order();
    if (is_rational())
        return *this;
    std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        raw[static_cast<std::size_t>((static_cast<long>(k) * (n - 1)) % n)] += coeffs_[k];
    return normalize(raw, n);
}

BigComplex CycNumber::embed(long a, mpfr_prec_t bits) const
{
    const long n = order();
    if (gcd_long(((a % n) + n) % n, n) != 1)
        throw Error(ErrorCode::NotAnEmbedding,
                    "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
    bits = std::max<mpfr_prec_t>(bits, 128);
    BigComplex sum(bits);
    const BigFloat two_pi_over_n = BigFloat::pi(bits + 16) * BigFloat(2.0, bits + 16) / BigFloat(mpz_class(n), bits + 16);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0)
            continue;
        const long e = ((a % n) * static_cast<long>(k) % n + n) % n;
        BigComplex term = unit_phase(two_pi_over_n * BigFloat(mpz_class(e), bits + 16));
        BigFloat c(coeffs_[k], bits + 16);
        term.re *= c;
        term.im *= c;
        sum += term;
    }
    return sum;
}

mpz_class CycNumber::denominator() const
{
    mpz_class den = 1;
    for (const auto& c : coeffs_)
        den = lcm(den, mpz_class(c.get_den()));
    return den;
}

std::string CycNumber::to_string() const
{
    if (is_rational())
        return rigidcalc::to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "zeta" << order();
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

bool operator==(const CycNumber& a, const CycNumber& b)
{
    if (a.field_ == b.field_)
        return a.coeffs_ == b.coeffs_;
    CycNumber x = a, y = b;
    x.align_with(y);
    return x.coeffs_ == y.coeffs_;
}

// -- RootOfUnity -------------------------------------------------------------

RootOfUnity::RootOfUnity(long num, long den)
{
    if (den < 1)
        throw Error(ErrorCode::InvalidOrder, "root of unity order must be >= 1");
    num = ((num % den) + den) % den;
    const long g = gcd_long(num, den);
    num_ = num / g;
    den_ = den / g;
    if (num_ == 0)
        den_ = 1;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& rhs) const
{
    const long l = lcm_long(den_, rhs.den_);
    return {num_ * (l / den_) + rhs.num_ * (l / rhs.den_), l};
}

CycNumber RootOfUnity::to_cyc(long field_order) const
{
    if (field_order % den_ != 0)
        throw Error(ErrorCode::NotRootOfUnity,
                    to_string() + " is not in mu_" + std::to_string(field_order));
    return CycNumber::zeta(field_order, num_ * (field_order / den_));
}

std::string RootOfUnity::to_string() const
{
    if (den_ == 1)
        return "1";
    if (den_ == 2)
        return "-1";
    std::string out = "zeta" + std::to_string(den_);
    if (num_ != 1)
        out += "^" + std::to_string(num_);
    return out;
}

RootOfUnity RootOfUnity::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s == "1" || s == "+1")
        return one();
    if (s == "-1")
        return minus_one();
    auto bad = [&] { return Error(ErrorCode::ParseError, "not a root of unity: '" + std::string(text) + "'"); };
    if (s.rfind("zeta", 0) != 0)
        throw bad();
    std::string_view rest(s);
    rest.remove_prefix(4);
    auto caret = rest.find('^');
    std::string_view order_text = rest.substr(0, caret);
    long order = 0, power = 1;
    auto [p1, e1] = std::from_chars(order_text.data(), order_text.data() + order_text.size(), order);
    if (e1 != std::errc() || p1 != order_text.data() + order_text.size() || order < 1)
        throw bad();
    if (caret != std::string_view::npos) {
        std::string_view power_text = rest.substr(caret + 1);
        auto [p2, e2] = std::from_chars(power_text.data(), power_text.data() + power_text.size(), power);
        if (e2 != std::errc() || p2 != power_text.data() + power_text.size())
            throw bad();
    }
    return {power, order};
}

bool RootOfUnity::recognize(const CycNumber& x, long search_order, RootOfUnity& out)
{
    const long n = lcm_long(search_order, x.order());
    if (n % search_order != 0 || x.is_zero())
        return false;
    for (long k = 0; k < search_order; ++k) {
        if (CycNumber::zeta(search_order, k) == x) {
            out = RootOfUnity(k, search_order);
            return true;
        }
    }
    return false;
}

std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b)
{
    // Compare num/den as fractions in [0, 1).
    const long lhs = a.num_ * b.den_;
    const long rhs = b.num_ * a.den_;
    if (auto c = lhs <=> rhs; c != 0)
        return c;
    return a.den_ <=> b.den_;
}

} // namespace rigidcalc
