#pragma once

// Differential dimension polynomials of M = K[Delta]^n / N read off the
// leaders of a characteristic set of N.

#include <optional>
#include <vector>

#include "lindiff/diffmodule.hpp"
#include "lindiff/numpoly.hpp"

namespace lindiff {

struct DimensionReport {
  NumericalPolynomial dimpoly;
  /// Differential dimension: the C(t+m, m) coefficient of dimpoly.
  Integer diff_dimension;
  std::optional<int> type;
  Integer typical_height;
  /// Components without a leader; they are differentially independent in M.
  std::vector<std::size_t> free_components;
  /// m = 1 only: K-dimension of M modulo the free components.
  std::optional<Integer> below_leader_count;
  /// m = 1 only: constant term r of phi(t) = d t + r.
  std::optional<Integer> free_term;
};

/// Leader exponents grouped by component.
Antichain leader_antichain(const CharSet& c);

/// phi(k) = dim_K M_k. Throws OrderlyRequired for a non-orderly ranking.
NumericalPolynomial dimension_polynomial(const CharSet& c);

/// Computed both from phi and by counting leaderless components; a mismatch
/// raises std::logic_error.
Integer diff_dimension(const CharSet& c);

struct FreeSplit {
  std::vector<std::size_t> free_components;
  Integer below_leader_count;
};

/// m = 1 only (UnsupportedForPartial otherwise).
FreeSplit free_split(const CharSet& c);

DimensionReport dimension_report(const CharSet& c);

}  // namespace lindiff
