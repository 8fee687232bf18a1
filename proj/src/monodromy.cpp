#include "rigidcalc/monodromy.hpp"

#include "rigidcalc/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace rigidcalc {

// -- Puncture -------------------------------------------------------------------

Puncture Puncture::parse(std::string_view text)
{
    if (text == "inf" || text == "infinity" || text == "oo" || text == "∞")
        return infinity();
    return finite(parse_rational(text));
}

const Rational& Puncture::value() const
{
    if (!where_)
        throw Error(ErrorCode::InvalidArgument, "infinity has no finite value");
    return *where_;
}

std::string Puncture::label() const { return where_ ? to_string(*where_) : "inf"; }

// -- MonodromyTuple ---------------------------------------------------------------

MonodromyTuple MonodromyTuple::make(long order, std::vector<Puncture> punctures, std::vector<ExactMatrix> matrices)
{
    if (order < 1)
        throw Error(ErrorCode::InvalidOrder, "tuple order must be >= 1");
    if (punctures.size() != matrices.size())
        throw Error(ErrorCode::DimensionMismatch, std::to_string(punctures.size()) + " punctures but " +
                                                      std::to_string(matrices.size()) + " matrices");
    if (matrices.empty())
        throw Error(ErrorCode::DimensionMismatch, "a tuple needs at least one finite puncture");
    for (std::size_t i = 0; i < punctures.size(); ++i) {
        if (punctures[i].is_infinity())
            throw Error(ErrorCode::DuplicatePuncture, "infinity is implicit and cannot be listed");
        for (std::size_t j = 0; j < i; ++j)
            if (punctures[i] == punctures[j])
                throw Error(ErrorCode::DuplicatePuncture, "puncture " + punctures[i].label() + " listed twice");
    }
    const std::size_t n = matrices.front().rows();
    long field = order;
    for (const auto& m : matrices) {
        if (!m.is_square() || m.rows() != n || n == 0)
            throw Error(ErrorCode::DimensionMismatch, "local monodromies must be square of one common size");
        field = lcm_long(field, m.order());
    }
    MonodromyTuple t;
    t.order_ = field;
    t.rank_ = n;
    t.punctures_ = std::move(punctures);
    ExactMatrix product = ExactMatrix::identity(n, field);
    for (auto& m : matrices) {
        m = m.lift(field);
        product = product * m;
    }
    t.matrices_ = std::move(matrices);
    // inverse() raises SingularMatrix when any factor is singular.
    t.at_infinity_ = inverse(product);
    return t;
}

std::vector<Puncture> MonodromyTuple::all_punctures() const
{
    std::vector<Puncture> out = punctures_;
    out.push_back(Puncture::infinity());
    return out;
}

std::vector<ExactMatrix> MonodromyTuple::all_local_monodromies() const
{
    std::vector<ExactMatrix> out = matrices_;
    out.push_back(at_infinity_);
    return out;
}

const ExactMatrix& MonodromyTuple::monodromy_at(const Puncture& p) const
{
    if (p.is_infinity())
        return at_infinity_;
    for (std::size_t i = 0; i < punctures_.size(); ++i)
        if (punctures_[i] == p)
            return matrices_[i];
    throw Error(ErrorCode::UnknownPuncture, "puncture " + p.label() + " is not in the tuple");
}

bool operator==(const MonodromyTuple& a, const MonodromyTuple& b)
{
    return a.rank_ == b.rank_ && a.punctures_ == b.punctures_ && a.matrices_ == b.matrices_;
}

// -- JordanType --------------------------------------------------------------------

JordanType::JordanType(std::vector<JordanBlock> blocks)
{
    std::map<std::pair<RootOfUnity, std::size_t>, std::size_t> merged;
    for (const auto& b : blocks)
        if (b.multiplicity > 0)
            merged[{b.eigenvalue, b.size}] += b.multiplicity;
    for (const auto& [key, mult] : merged)
        blocks_.push_back({key.first, key.second, mult});
    std::stable_sort(blocks_.begin(), blocks_.end(), [](const JordanBlock& x, const JordanBlock& y) {
        if (x.eigenvalue != y.eigenvalue)
            return x.eigenvalue < y.eigenvalue;
        return x.size > y.size;
    });
}

std::size_t JordanType::dimension() const
{
    std::size_t total = 0;
    for (const auto& b : blocks_)
        total += b.size * b.multiplicity;
    return total;
}

std::size_t JordanType::block_count() const
{
    std::size_t total = 0;
    for (const auto& b : blocks_)
        total += b.multiplicity;
    return total;
}

JordanType JordanType::scaled(const RootOfUnity& s) const
{
    std::vector<JordanBlock> out = blocks_;
    for (auto& b : out)
        b.eigenvalue = b.eigenvalue * s;
    return JordanType(std::move(out));
}

std::string JordanType::notation() const
{
    std::string out;
    for (const auto& b : blocks_) {
        std::string eigen = b.eigenvalue.to_string();
        if (eigen.front() == '-' || eigen.find('^') != std::string::npos)
            eigen = "(" + eigen + ")";
        std::string item;
        bool compound = false;
        if (b.size == 1) {
            item = eigen;
        } else if (b.eigenvalue == RootOfUnity::one()) {
            item = "U(" + std::to_string(b.size) + ")";
        } else {
            item = eigen + "(x)U(" + std::to_string(b.size) + ")";
            compound = true;
        }
        if (b.multiplicity > 1)
            item = (compound ? "(" + item + ")" : item) + "^{+" + std::to_string(b.multiplicity) + "}";
        if (!out.empty())
            out += " (+) ";
        out += item;
    }
    return out;
}

// -- local invariants ---------------------------------------------------------------

bool is_quasi_unipotent(const ExactMatrix& m, long order)
{
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "quasi-unipotence needs a square matrix");
    const std::size_t n = m.rows();
    const ExactMatrix shifted = m.pow(order) - ExactMatrix::identity(n, m.order());
    return shifted.pow(static_cast<long>(n)).is_zero();
}

std::size_t eigenspace_dimension(const ExactMatrix& m, const CycNumber& value)
{
    return m.rows() - rank(m - ExactMatrix::scalar(m.rows(), value));
}

JordanType jordan_type(const ExactMatrix& m, long order)
{
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "Jordan type needs a square matrix");
    const std::size_t n = m.rows();
    std::vector<JordanBlock> blocks;
    std::size_t accounted = 0;
    for (long k = 0; k < order && accounted < n; ++k) {
        const ExactMatrix shifted = m - ExactMatrix::scalar(n, CycNumber::zeta(order, k));
        // ranks[j] = rank(shifted^j); stop once the sequence stabilizes
        std::vector<std::size_t> ranks{n, rank(shifted)};
        if (ranks[1] == n)
            continue;
        ExactMatrix power = shifted;
        while (ranks.back() != ranks[ranks.size() - 2]) {
            power = power * shifted;
            ranks.push_back(rank(power));
        }
        for (std::size_t j = 1; j + 1 < ranks.size(); ++j) {
            const std::size_t count = ranks[j - 1] - 2 * ranks[j] + ranks[j + 1];
            if (count > 0)
                blocks.push_back({RootOfUnity(k, order), j, count});
        }
        accounted += n - ranks.back();
    }
    if (accounted != n)
        throw Error(ErrorCode::NotQuasiUnipotent,
                    "eigenvalues are not all in mu_" + std::to_string(order) + " (try a larger N)");
    return JordanType(std::move(blocks));
}

std::size_t centralizer_dim(const ExactMatrix& m)
{
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "centralizer needs a square matrix");
    const std::size_t n = m.rows();
    // Unknown X_{kl} sits at column k*n + l; equation (i,j) is row i*n + j of
    // (mX - Xm)_{ij} = sum_k m_ik X_kj - sum_k X_ik m_kj.
    ExactMatrix system(n * n, n * n, m.order());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (!m(i, k).is_zero())
                    system.set(i * n + j, k * n + j, system(i * n + j, k * n + j) + m(i, k));
                if (!m(k, j).is_zero())
                    system.set(i * n + j, i * n + k, system(i * n + j, i * n + k) - m(k, j));
            }
    return n * n - rank(system);
}

long rigidity_index(const MonodromyTuple& t)
{
    const auto n = static_cast<long>(t.rank());
    const auto locals = t.all_local_monodromies();
    long index = (2 - static_cast<long>(locals.size())) * n * n;
    for (const auto& a : locals)
        index += static_cast<long>(centralizer_dim(a));
    return index;
}

namespace {

// Incrementally maintained fully reduced echelon basis of a subspace.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t length) : length_(length) {}

    std::size_t dimension() const { return basis_.size(); }

    /// Adds v if it is outside the span; returns whether it was added.
    bool insert(CycVector v)
    {
        for (const auto& [pivot, b] : basis_) {
            if (v[pivot].is_zero())
                continue;
            const CycNumber factor = v[pivot];
            for (std::size_t j = 0; j < length_; ++j)
                if (!b[j].is_zero())
                    v[j] -= factor * b[j];
        }
        std::size_t pivot = 0;
        while (pivot < length_ && v[pivot].is_zero())
            ++pivot;
        if (pivot == length_)
            return false;
        const CycNumber inv = v[pivot].inverse();
        for (auto& e : v)
            if (!e.is_zero())
                e *= inv;
        for (auto& [other_pivot, b] : basis_) {
            if (b[pivot].is_zero())
                continue;
            const CycNumber factor = b[pivot];
            for (std::size_t j = 0; j < length_; ++j)
                if (!v[j].is_zero())
                    b[j] -= factor * v[j];
        }
        basis_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    std::size_t length_;
    std::vector<std::pair<std::size_t, CycVector>> basis_;
};

} // namespace

bool is_absolutely_irreducible(const MonodromyTuple& t)
{
    const std::size_t n = t.rank();
    const std::size_t full = n * n;
    EchelonSpan span(full);
    std::deque<ExactMatrix> frontier;
    const ExactMatrix id = ExactMatrix::identity(n, t.order());
    span.insert(id.entries());
    frontier.push_back(id);
    // Each productive round raises the span dimension, so n^2 rounds suffice.
    for (std::size_t round = 0; round < full && !frontier.empty() && span.dimension() < full; ++round) {
        std::deque<ExactMatrix> next;
        for (const auto& word : frontier)
            for (const auto& gen : t.matrices()) {
                ExactMatrix product = gen * word;
                if (span.insert(product.entries()))
                    next.push_back(std::move(product));
                if (span.dimension() == full)
                    return true;
            }
        frontier = std::move(next);
    }
    return span.dimension() == full;
}

std::optional<Puncture> is_somewhere_maximal(const MonodromyTuple& t)
{
    // Every local monodromy must be quasi-unipotent, even when an earlier
    // puncture already qualifies.
    std::vector<std::size_t> blocks;
    for (const auto& m : t.matrices())
        blocks.push_back(jordan_type(m, t.order()).block_count());
    const std::size_t at_infinity = jordan_type(t.at_infinity(), t.order()).block_count();
    // Rank one: every puncture qualifies and the first finite one is reported.
    if (t.rank() == 1)
        return t.finite_punctures().front();
    if (at_infinity == 1)
        return Puncture::infinity();
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i] == 1)
            return t.finite_punctures()[i];
    return std::nullopt;
}

std::string RegularityCertificate::to_string() const
{
    return witness ? "RegularViaLemma(" + witness->label() + ")" : "Unknown";
}

RegularityCertificate certify_regular(const MonodromyTuple& t) { return {is_somewhere_maximal(t)}; }

} // namespace rigidcalc
