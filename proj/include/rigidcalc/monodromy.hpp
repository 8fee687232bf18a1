#pragma once

#include "rigidcalc/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rigidcalc {

/// A point of P^1(Q): a finite rational label or infinity.
class Puncture {
public:
    static Puncture finite(const Rational& where) { return Puncture(where); }
    static Puncture infinity() { return Puncture(); }
    /// "inf", "infinity" or a rational such as "0", "1", "-1/2".
    static Puncture parse(std::string_view text);

    bool is_infinity() const { return !where_.has_value(); }
    const Rational& value() const;
    std::string label() const;

    friend bool operator==(const Puncture& a, const Puncture& b) { return a.where_ == b.where_; }

private:
    Puncture() = default;
    explicit Puncture(Rational where) : where_(std::move(where)) {}

    std::optional<Rational> where_;
};

/// Local monodromy data (A_1, ..., A_r) at the finite punctures of a local
/// system on P^1. The monodromy at infinity is derived as (A_1 ... A_r)^{-1}
/// so that the product over all punctures, infinity last, is the identity.
class MonodromyTuple {
public:
    /// Validates and builds a tuple. Throws DimensionMismatch,
    /// DuplicatePuncture or SingularMatrix.
    static MonodromyTuple make(long order, std::vector<Puncture> punctures, std::vector<ExactMatrix> matrices);

    long order() const { return order_; }
    std::size_t rank() const { return rank_; }
    const std::vector<Puncture>& finite_punctures() const { return punctures_; }
    const std::vector<ExactMatrix>& matrices() const { return matrices_; }
    const ExactMatrix& at_infinity() const { return at_infinity_; }

    /// Finite punctures in listed order, then infinity.
    std::vector<Puncture> all_punctures() const;
    /// Matrices matching all_punctures().
    std::vector<ExactMatrix> all_local_monodromies() const;

    /// Throws UnknownPuncture if `p` is neither listed nor infinity.
    const ExactMatrix& monodromy_at(const Puncture& p) const;

    friend bool operator==(const MonodromyTuple& a, const MonodromyTuple& b);

private:
    long order_ = 1;
    std::size_t rank_ = 0;
    std::vector<Puncture> punctures_;
    std::vector<ExactMatrix> matrices_;
    ExactMatrix at_infinity_;
};

inline MonodromyTuple make_tuple(long order, std::vector<Puncture> punctures, std::vector<ExactMatrix> matrices)
{
    return MonodromyTuple::make(order, std::move(punctures), std::move(matrices));
}

struct JordanBlock {
    RootOfUnity eigenvalue;
    std::size_t size = 1;
    std::size_t multiplicity = 1;

    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Multiset of Jordan blocks, kept sorted by eigenvalue angle and then by
/// decreasing size, with equal blocks merged into one entry.
class JordanType {
public:
    JordanType() = default;
    explicit JordanType(std::vector<JordanBlock> blocks);

    const std::vector<JordanBlock>& blocks() const { return blocks_; }
    /// Sum of block sizes counted with multiplicity.
    std::size_t dimension() const;
    /// Number of blocks counted with multiplicity.
    std::size_t block_count() const;
    /// Every eigenvalue scaled by `s` (the effect of a rank-one twist).
    JordanType scaled(const RootOfUnity& s) const;

    /// Display notation: "U(7)", "1^{+3} (+) (-1)^{+4}", "(-1)(x)U(2)".
    std::string notation() const;

    friend bool operator==(const JordanType&, const JordanType&) = default;

private:
    std::vector<JordanBlock> blocks_;
};

/// True iff (m^N - I)^n = 0.
bool is_quasi_unipotent(const ExactMatrix& m, long order);

/// Jordan type read off the rank sequences rank((m - zeta I)^j) for each
/// zeta in mu_N. Throws NotQuasiUnipotent when the eigenvalues are not all
/// N-th roots of unity.
JordanType jordan_type(const ExactMatrix& m, long order);

/// dim of the eigenspace of `m` for eigenvalue `value`.
std::size_t eigenspace_dimension(const ExactMatrix& m, const CycNumber& value);

/// Dimension of {X : mX = Xm}, the kernel of the n^2 x n^2 commutation system.
std::size_t centralizer_dim(const ExactMatrix& m);

/// (2 - r') n^2 + sum of centralizer dimensions over all r' punctures
/// including infinity. Equals 2 for cohomologically rigid irreducible tuples.
long rigidity_index(const MonodromyTuple& t);

/// Burnside criterion: the algebra generated by the local monodromies is the
/// full matrix algebra.
bool is_absolutely_irreducible(const MonodromyTuple& t);

/// A puncture whose local monodromy is a single Jordan block. Infinity is
/// tried first, then the finite punctures in listed order; for rank one,
/// where every puncture qualifies, the first finite puncture is returned.
/// Throws NotQuasiUnipotent.
std::optional<Puncture> is_somewhere_maximal(const MonodromyTuple& t);

struct RegularityCertificate {
    /// Set exactly when some local monodromy is a single Jordan block.
    std::optional<Puncture> witness;

    bool regular() const { return witness.has_value(); }
    std::string to_string() const;
};

RegularityCertificate certify_regular(const MonodromyTuple& t);

} // namespace rigidcalc
