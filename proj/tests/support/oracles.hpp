#pragma once

// Test-only oracles. None of these call into the reduction, completion or
// staircase code they are used to check.

#include <cstdint>
#include <span>
#include <vector>

#include "lindiff/lindiff.hpp"

namespace lindiff::testing {

/// theta * a by the closed Leibniz formula
/// sum_{sigma <= theta} C(theta, sigma) d^(theta - sigma)(a) sigma.
OrePoly leibniz_closed_form(const DerivMonomial& theta, const RatFun& a);

/// Rank over K of a dense matrix of field elements, by exact Gaussian
/// elimination.
std::size_t exact_rank(std::vector<std::vector<RatFun>> rows);

/// Rank over K of the same matrix, computed over F_p (p = 2^61 - 1) after
/// substituting random residues for t1..tv. Specialization and reduction mod p
/// never raise the rank; the maximum over `points` substitutions equals the
/// generic rank unless every point hits a proper subvariety mod p.
std::size_t generic_rank(const std::vector<std::vector<RatFun>>& rows, int points = 2);

/// All derivative monomials of order <= k in m derivations.
std::vector<DerivMonomial> monomials_up_to(std::size_t m, std::uint32_t k);

/// dim_K of L_k / (N cap L_k) where L_k is spanned by theta e_i with
/// ord theta <= k and N is the submodule generated by gens. N cap L_k is
/// approximated from below by the span of theta g with
/// ord theta + ord g <= k + slack, intersected with L_k:
/// dim(span cap L_k) = rank(span) - rank(span projected on orders > k).
/// Ranks use generic_rank unless `exact` is set.
std::size_t truncated_quotient_dimension(DiffFieldConfig cfg, std::size_t n,
                                         std::span<const ModElement> gens, std::uint32_t k,
                                         std::uint32_t slack, bool exact = false);

/// Polynomial division of a by b in one variable over Q; returns the
/// quotient and requires a zero remainder (checked by the caller).
struct UnivariateDivision {
  MPoly quotient;
  MPoly remainder;
};
UnivariateDivision univariate_divide(const MPoly& a, const MPoly& b);

}  // namespace lindiff::testing
