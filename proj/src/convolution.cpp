#include "rigidcalc/convolution.hpp"

#include "rigidcalc/errors.hpp"

#include <mutex>

namespace rigidcalc {

CycNumber RankOneData::at_infinity() const
{
    CycNumber product(1);
    for (const auto& s : scalars)
        product *= s;
    return product.inverse();
}

MonodromyTuple rank_one_system(const std::vector<Puncture>& punctures, const std::vector<CycNumber>& scalars,
                               long order)
{
    if (punctures.size() != scalars.size())
        throw Error(ErrorCode::DimensionMismatch, "one scalar per finite puncture is required");
    std::vector<ExactMatrix> matrices;
    for (const auto& s : scalars) {
        if (s.is_zero())
            throw Error(ErrorCode::ZeroScalar, "rank-one scalars must be nonzero");
        if (!s.pow(order).is_one())
            throw Error(ErrorCode::NotRootOfUnity, s.to_string() + " is not an N-th root of unity for N = " +
                                                       std::to_string(order));
        matrices.push_back(ExactMatrix::scalar(1, s));
    }
    return MonodromyTuple::make(order, punctures, std::move(matrices));
}

MonodromyTuple rank_one_system(const CycNumber& at_zero, const CycNumber& at_one, long order)
{
    return rank_one_system({Puncture::finite(0), Puncture::finite(1)}, {at_zero, at_one}, order);
}

MonodromyTuple tensor_rank_one(const MonodromyTuple& t, const RankOneData& twist)
{
    if (twist.scalars.size() != t.finite_punctures().size())
        throw Error(ErrorCode::PunctureMismatch, std::to_string(twist.scalars.size()) + " twist scalars for " +
                                                     std::to_string(t.finite_punctures().size()) + " punctures");
    std::vector<ExactMatrix> matrices;
    long order = t.order();
    for (std::size_t k = 0; k < twist.scalars.size(); ++k) {
        if (twist.scalars[k].is_zero())
            throw Error(ErrorCode::ZeroScalar, "twist scalars must be nonzero");
        order = lcm_long(order, twist.scalars[k].order());
        matrices.push_back(t.matrices()[k] * twist.scalars[k]);
    }
    return MonodromyTuple::make(order, t.finite_punctures(), std::move(matrices));
}

MonodromyTuple tensor_rank_one(const MonodromyTuple& t, const MonodromyTuple& rank_one)
{
    if (rank_one.rank() != 1)
        throw Error(ErrorCode::DimensionMismatch, "twist must be a rank-one tuple");
    if (!(rank_one.finite_punctures() == t.finite_punctures()))
        throw Error(ErrorCode::PunctureMismatch, "twist lives on different punctures");
    RankOneData data;
    for (const auto& m : rank_one.matrices())
        data.scalars.push_back(m(0, 0));
    return tensor_rank_one(t, data);
}

MonodromyTuple middle_convolution(const MonodromyTuple& t, const CycNumber& lambda)
{
    if (lambda.is_zero())
        throw Error(ErrorCode::ZeroLambda, "middle convolution needs lambda != 0");
    const long order = lcm_long(t.order(), lambda.order());
    const std::size_t n = t.rank();
    const std::size_t r = t.matrices().size();
    const std::size_t dim = r * n;
    const ExactMatrix id_n = ExactMatrix::identity(n, order);

    std::vector<ExactMatrix> minus_one;
    for (const auto& a : t.matrices())
        minus_one.push_back(a.lift(order) - id_n);

    // B_k is the identity outside block row k, whose blocks are
    // (A_j - 1) for j < k, lambda A_k at j = k, lambda (A_j - 1) for j > k.
    std::vector<ExactMatrix> big;
    ExactMatrix stacked(dim, dim, order); // block row k of B_k - 1, for L
    for (std::size_t k = 0; k < r; ++k) {
        ExactMatrix b = ExactMatrix::identity(dim, order);
        for (std::size_t j = 0; j < r; ++j) {
            ExactMatrix blk = j < k    ? minus_one[j]
                              : j == k ? t.matrices()[j] * lambda
                                       : minus_one[j] * lambda;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    b.set(k * n + x, j * n + y, blk(x, y));
                    CycNumber v = blk(x, y);
                    if (j == k && x == y)
                        v -= CycNumber(1);
                    stacked.set(k * n + x, j * n + y, v);
                }
        }
        big.push_back(std::move(b));
    }

    // Spanning set of K + L.
    std::vector<CycVector> spanning;
    for (std::size_t j = 0; j < r; ++j)
        for (const auto& v : rank_kernel(minus_one[j]).kernel) {
            CycVector full(dim, CycNumber(Rational(0), order));
            for (std::size_t x = 0; x < n; ++x)
                full[j * n + x] = v[x];
            spanning.push_back(std::move(full));
        }
    for (auto& v : rank_kernel(stacked).kernel)
        spanning.push_back(std::move(v));

    // Basis of K + L from the echelon form, completed by the standard vectors
    // at its non-pivot columns.
    std::vector<CycVector> basis;
    std::vector<bool> is_pivot(dim, false);
    if (!spanning.empty()) {
        ExactMatrix rows = from_columns(spanning, dim).transpose();
        RowEchelon e = row_echelon(rows);
        for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
            CycVector v(dim);
            for (std::size_t c = 0; c < dim; ++c)
                v[c] = e.reduced(k, c);
            basis.push_back(std::move(v));
            is_pivot[e.pivot_columns[k]] = true;
        }
    }
    const std::size_t sub_dim = basis.size();
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < dim; ++c)
        if (!is_pivot[c]) {
            CycVector v(dim, CycNumber(Rational(0), order));
            v[c] = CycNumber(Rational(1), order);
            basis.push_back(std::move(v));
            complement.push_back(c);
        }
    const std::size_t out_rank = complement.size();
    if (out_rank == 0)
        throw Error(ErrorCode::DimensionMismatch, "middle convolution is the zero local system");

    // Induced action: bottom-right block of P^{-1} B P with P = [K+L | complement].
    const ExactMatrix p_inv = inverse(from_columns(basis, dim));
    const ExactMatrix project = p_inv.block(sub_dim, 0, out_rank, dim);
    std::vector<ExactMatrix> induced;
    for (const auto& b : big) {
        ExactMatrix cols(dim, out_rank, order);
        for (std::size_t x = 0; x < dim; ++x)
            for (std::size_t y = 0; y < out_rank; ++y)
                cols.set(x, y, b(x, complement[y]));
        induced.push_back(project * cols);
    }
    return MonodromyTuple::make(order, t.finite_punctures(), std::move(induced));
}

MonodromyTuple build_F(long i)
{
    if (i < 0)
        throw Error(ErrorCode::NegativeIndex, "build_F index must be >= 0, got " + std::to_string(i));
    static std::mutex mutex;
    static std::vector<MonodromyTuple> cache;
    std::lock_guard lock(mutex);
    if (cache.empty())
        cache.push_back(rank_one_system(CycNumber(-1), CycNumber(-1), 2));
    const CycNumber minus_one(-1);
    while (static_cast<long>(cache.size()) <= i) {
        const long next = static_cast<long>(cache.size());
        MonodromyTuple convolved = middle_convolution(cache.back(), minus_one);
        // odd index: L(1, -1); even index: L(-1, 1)
        RankOneData twist{next % 2 == 1 ? std::vector<CycNumber>{1, -1} : std::vector<CycNumber>{-1, 1}};
        cache.push_back(tensor_rank_one(convolved, twist));
    }
    return cache[static_cast<std::size_t>(i)];
}

namespace {

// Root of unity in mu_N with the largest eigenspace; ties go to the smallest
// exponent k of zeta_N^k.
CycNumber dominant_eigenvalue(const ExactMatrix& m, long order)
{
    std::size_t best_dim = 0;
    long best_k = 0;
    for (long k = 0; k < order; ++k) {
        const std::size_t d = eigenspace_dimension(m, CycNumber::zeta(order, k));
        if (d > best_dim) {
            best_dim = d;
            best_k = k;
        }
    }
    return CycNumber::zeta(order, best_k);
}

} // namespace

ReductionStepResult katz_reduce_step(const MonodromyTuple& t)
{
    if (t.rank() < 2)
        throw Error(ErrorCode::AlreadyRankOne, "tuple already has rank 1");
    if (const long index = rigidity_index(t); index != 2)
        throw Error(ErrorCode::NotRigid, "rigidity index is " + std::to_string(index) + ", expected 2");
    if (!is_absolutely_irreducible(t))
        throw Error(ErrorCode::NotIrreducible, "tuple is not absolutely irreducible");

    const long order = t.order();
    RankOneData twist;
    for (const auto& a : t.matrices())
        twist.scalars.push_back(dominant_eigenvalue(a, order).inverse());
    const MonodromyTuple twisted = tensor_rank_one(t, twist);
    // With A_inf = (A_1...A_r)^{-1}, the convolved rank is
    // sum_k rk(A_k - 1) + rk(A_inf - lambda) - n, so lambda is taken from A_inf.
    const CycNumber lambda = dominant_eigenvalue(twisted.at_infinity(), order);
    if (lambda.is_one())
        throw Error(ErrorCode::NoProgress, "dominant eigenvalue at infinity is 1; MC_1 does not reduce rank");
    MonodromyTuple result = middle_convolution(twisted, lambda);
    if (result.rank() >= t.rank())
        throw Error(ErrorCode::NoProgress, "reduction step went from rank " + std::to_string(t.rank()) + " to " +
                                               std::to_string(result.rank()));
    return {std::move(twist), lambda, std::move(result)};
}

ReductionTrace katz_reduce(const MonodromyTuple& t)
{
    ReductionTrace trace{{}, t};
    while (trace.final_tuple.rank() > 1) {
        if (trace.steps.size() + 1 >= t.rank())
            throw Error(ErrorCode::NoProgress, "reduction exceeded rank - 1 steps");
        ReductionStepResult step = katz_reduce_step(trace.final_tuple);
        trace.steps.push_back({std::move(step.twist), step.lambda, step.result.rank()});
        trace.final_tuple = std::move(step.result);
    }
    return trace;
}

} // namespace rigidcalc
