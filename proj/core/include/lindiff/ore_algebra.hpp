#pragma once

// The ring K[Delta] of linear differential operators. Coefficients sit on the
// left of the derivative monomials and the derivations commute with field
// elements through delta_i * a = a * delta_i + d_i(a).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lindiff/scalars.hpp"

namespace lindiff {

/// theta = delta_1^k1 ... delta_m^km.
struct DerivMonomial {
  std::vector<std::uint32_t> exps;

  DerivMonomial() = default;
  explicit DerivMonomial(std::size_t m) : exps(m, 0) {}
  explicit DerivMonomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  static DerivMonomial delta(std::size_t m, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps.size(); }
  std::uint32_t ord() const;
  bool is_identity() const { return ord() == 0; }
  /// True when this divides other, i.e. other is a derivative of this.
  bool divides(const DerivMonomial& other) const;

  DerivMonomial operator*(const DerivMonomial& other) const;
  /// Exponentwise difference; requires divisor.divides(*this).
  DerivMonomial operator/(const DerivMonomial& divisor) const;

  auto operator<=>(const DerivMonomial&) const = default;
};

/// Exponentwise maximum.
DerivMonomial lcm(const DerivMonomial& a, const DerivMonomial& b);

/// Prints `d`, `d^2` (m = 1) or `d1*d2^3` style; empty string for identity.
std::string to_string(const DerivMonomial& theta);

class OrePoly {
 public:
  using TermMap = std::map<DerivMonomial, RatFun>;

  explicit OrePoly(DiffFieldConfig cfg) : cfg_(cfg) {}
  explicit OrePoly(const RatFun& scalar);
  static OrePoly monomial(const DerivMonomial& theta, const RatFun& coeff);
  static OrePoly delta(DiffFieldConfig cfg, std::size_t index);

  const DiffFieldConfig& config() const { return cfg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Maximal ord over the terms; -1 for the zero operator.
  int degree() const;
  /// Coefficient of theta (zero when absent).
  RatFun coeff(const DerivMonomial& theta) const;
  /// Coefficient of delta^degree() when m = 1.
  RatFun leading_coeff() const;
  bool is_unit() const { return degree() == 0; }

  void add_term(const DerivMonomial& theta, const RatFun& c);

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& other);
  OrePoly& operator-=(const OrePoly& other);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  friend bool operator==(const OrePoly&, const OrePoly&) = default;

  /// a * f: scales every coefficient on the left.
  OrePoly scaled(const RatFun& a) const;
  /// f * theta for a derivative monomial (exponent shift).
  OrePoly shifted(const DerivMonomial& theta) const;

  std::string to_string(std::span<const std::string> field_names) const;
  std::string to_string() const;

 private:
  DiffFieldConfig cfg_;
  TermMap terms_;
};

/// theta * a rewritten as sum_sigma c_sigma sigma, by repeated single-delta
/// commutation.
OrePoly commute(const DerivMonomial& theta, const RatFun& a);

/// Product in K[Delta]. Throws ConfigMismatch for operators over different
/// fields.
OrePoly ore_mul(const OrePoly& f, const OrePoly& g);
OrePoly operator*(const OrePoly& f, const OrePoly& g);

/// Formal adjoint: (a theta)^* = (-1)^ord(theta) theta a. An anti-automorphism
/// of K[Delta] fixing K.
OrePoly adjoint(const OrePoly& f);

std::ostream& operator<<(std::ostream& os, const DerivMonomial& theta);
std::ostream& operator<<(std::ostream& os, const OrePoly& f);

/// Applies the operator to a field element: sum_theta c_theta * theta(a).
RatFun ore_apply(const OrePoly& f, const RatFun& a);

/// theta(a) for a derivative monomial.
RatFun apply_monomial(const DerivMonomial& theta, const RatFun& a);

enum class DivisionSide {
  right,  ///< f = q * g + r
  left,   ///< f = g * q + r
};

struct OreDivision {
  OrePoly quotient;
  OrePoly remainder;
};

/// Euclidean division in K[delta]. Requires m = 1 (UnsupportedForPartial)
/// and g != 0 (DivisionByZero). deg remainder < deg g.
OreDivision ore_divmod(const OrePoly& f, const OrePoly& g, DivisionSide side);

}  // namespace lindiff
