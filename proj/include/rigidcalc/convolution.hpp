#pragma once

#include "rigidcalc/monodromy.hpp"

#include <vector>

namespace rigidcalc {

/// Scalars of a rank-one local system, one per finite puncture. The scalar at
/// infinity is the inverse of their product.
struct RankOneData {
    std::vector<CycNumber> scalars;

    CycNumber at_infinity() const;
};

/// Rank-one tuple with A_k = [scalars_k]. L(chi1, chi2) is the case
/// punctures {0, 1}. Throws ZeroScalar, NotRootOfUnity.
MonodromyTuple rank_one_system(const std::vector<Puncture>& punctures, const std::vector<CycNumber>& scalars,
                               long order);

/// L(chi1, chi2) on P^1 - {0, 1, infinity}.
MonodromyTuple rank_one_system(const CycNumber& at_zero, const CycNumber& at_one, long order);

/// A_k -> s_k A_k. Throws PunctureMismatch when the scalar count differs.
MonodromyTuple tensor_rank_one(const MonodromyTuple& t, const RankOneData& twist);
/// Twist by a rank-one tuple on the same punctures.
MonodromyTuple tensor_rank_one(const MonodromyTuple& t, const MonodromyTuple& rank_one);

/// Middle convolution MC_lambda realized on tuples: the block matrices B_k on
/// the rn-dimensional space, acting on the quotient by K + L where
/// K = (+)_j ker(A_j - 1) and L = intersection of ker(B_k - 1).
/// Throws ZeroLambda.
MonodromyTuple middle_convolution(const MonodromyTuple& t, const CycNumber& lambda);

/// The recursive family F_0 = L(-1,-1), F_{2i-1} = L(1,-1) (x) MC_{-1}(F_{2i-2}),
/// F_{2i} = L(-1,1) (x) MC_{-1}(F_{2i-1}). Cached; safe to call concurrently.
/// Throws NegativeIndex.
MonodromyTuple build_F(long i);

struct ReductionStep {
    RankOneData twist;
    CycNumber lambda;
    std::size_t resulting_rank = 0;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    MonodromyTuple final_tuple;
};

struct ReductionStepResult {
    RankOneData twist;
    CycNumber lambda;
    MonodromyTuple result;
};

/// One step of Katz's rank reduction: twist every finite puncture so that
/// its largest eigenspace has eigenvalue 1, then convolve with the eigenvalue
/// of the twisted monodromy at infinity that has the largest eigenspace.
/// Throws NotRigid, NotIrreducible, AlreadyRankOne, NoProgress.
ReductionStepResult katz_reduce_step(const MonodromyTuple& t);

/// Iterates katz_reduce_step down to rank one.
ReductionTrace katz_reduce(const MonodromyTuple& t);

} // namespace rigidcalc
