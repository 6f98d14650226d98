#pragma once

// Integer-valued numerical polynomials in the binomial basis C(t+i, i) and
// the staircase counting kernel behind every dimension polynomial.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindiff/scalars.hpp"

namespace lindiff {

/// phi(t) = sum_i a_i * C(t + i, i), equal to the counting function it was
/// built from for every t >= valid_from.
class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;
  NumericalPolynomial(std::vector<Integer> binomial_coeffs, std::int64_t valid_from);

  /// Binomial-basis coefficients with trailing zeros stripped.
  const std::vector<Integer>& binomial_coeffs() const { return coeffs_; }
  /// a_i, zero past the stored length.
  Integer binomial_coeff(std::size_t i) const;
  std::int64_t valid_from() const { return valid_from_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Exact value sum a_i C(t+i, i), valid for any integer t as a polynomial.
  Integer operator()(std::int64_t t) const;

  /// Coefficients in the monomial basis 1, t, t^2, ...
  std::vector<Rational> monomial_coeffs() const;

  /// phi(t) - phi(t - 1).
  NumericalPolynomial difference() const;

  /// Monomial-basis display, e.g. `2*t + 1` or `1/2*t^2 + 3/2*t + 1`.
  std::string to_string() const;

  friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;

 private:
  std::vector<Integer> coeffs_;
  std::int64_t valid_from_ = 0;
};

/// The polynomial C(x + k, k) evaluated at an integer x (zero for k < 0).
Integer binomial_poly(std::int64_t x, int k);

using ExponentVector = std::vector<std::uint32_t>;

/// One finite set of pairwise incomparable exponent vectors per component.
struct Antichain {
  std::size_t m = 1;
  std::vector<std::vector<ExponentVector>> components;
};

/// Throws NotAntichain when a component holds comparable vectors or when a
/// vector has the wrong length.
void validate_antichain(const Antichain& e);

/// Inclusion-exclusion count of the lattice points of N^m not above any
/// element of E_i, summed over the components. Exponential in |E_i|; meant for
/// sets of at most a dozen leaders per component.
NumericalPolynomial count_cofilter(const Antichain& e);

/// Direct enumeration of the same counted set at a single t.
Integer brute_count(const Antichain& e, std::uint32_t t);

/// Kolchin-style invariants: type l = deg phi (nullopt for phi = 0),
/// typical height d_l = l! * (leading coefficient), differential height
/// d_m = m! * (coefficient of t^m).
struct TypeAndHeights {
  std::optional<int> type;
  Integer typical_height;
  Integer diff_height;
};

TypeAndHeights type_and_heights(const NumericalPolynomial& p, int m);

}  // namespace lindiff
