#pragma once

#include "rigidcalc/monodromy.hpp"

#include <map>
#include <vector>

namespace rigidcalc {

/// Finitely supported m : mu_infinity - {1} -> Z_{>0}.
using MultiplicityFunction = std::map<RootOfUnity, std::size_t>;

/// Companion matrix of the monic polynomial with the given coefficients
/// (constant term first, leading 1 omitted): ones on the subdiagonal and the
/// negated coefficients in the last column.
ExactMatrix companion_matrix(const std::vector<CycNumber>& coeffs);

/// Coefficients of prod (T - root), constant term first, leading 1 omitted.
std::vector<CycNumber> polynomial_from_roots(const std::vector<CycNumber>& roots);

/// Hypergeometric tuple on {0, 1}: with A, B the companion matrices of
/// prod (T - a_j) and prod (T - b_j), A_0 = B^{-1} and A_1 = B A^{-1}, so
/// the derived monodromy at infinity is A and A_1 is a pseudo-reflection.
/// Throws EmptyParameters, DimensionMismatch, NotRootOfUnity.
MonodromyTuple hypergeometric_tuple(const std::vector<RootOfUnity>& a, const std::vector<RootOfUnity>& b, long order);

/// Same, for parameters given as field elements; each must satisfy x^N = 1.
MonodromyTuple hypergeometric_tuple(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b, long order);

/// a = (1, ..., 1), b = each key repeated m(key) times. The result has a
/// single unipotent block at infinity, one block of size m(zeta) with
/// eigenvalue zeta^{-1} per key at 0, and a pseudo-reflection at 1.
/// Throws EmptySupport, NotRootOfUnity.
MonodromyTuple from_multiplicity_function(const MultiplicityFunction& m, long order);

} // namespace rigidcalc
