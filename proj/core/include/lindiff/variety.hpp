#pragma once

// Differential polynomials, K-rational points, linearization at a point and
// the tangent-space pipeline built on the linear layers.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lindiff/dimension.hpp"
#include "lindiff/diffmodule.hpp"
#include "lindiff/errors.hpp"
#include "lindiff/normalform.hpp"

namespace lindiff {

/// The indeterminate theta y_var.
struct DiffVar {
  std::size_t var = 0;
  DerivMonomial theta;

  auto operator<=>(const DiffVar&) const = default;
};

/// Power product of indeterminates; exponents are positive.
using DiffMonomial = std::map<DiffVar, std::uint32_t>;

/// Element of K{y_1, ..., y_n}.
class DiffPoly {
 public:
  using TermMap = std::map<DiffMonomial, RatFun>;

  DiffPoly(DiffFieldConfig cfg, std::size_t num_vars) : cfg_(cfg), n_(num_vars) {}
  static DiffPoly constant(std::size_t num_vars, const RatFun& c);
  static DiffPoly variable(DiffFieldConfig cfg, std::size_t num_vars, std::size_t var,
                           const DerivMonomial& theta);

  const DiffFieldConfig& config() const { return cfg_; }
  std::size_t num_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Every indeterminate occurring in the polynomial.
  std::vector<DiffVar> indeterminates() const;

  void add_term(const DiffMonomial& mono, const RatFun& c);

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& other);
  DiffPoly& operator-=(const DiffPoly& other);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

  DiffPoly scaled(const RatFun& a) const;
  /// Partial derivative with respect to one indeterminate.
  DiffPoly partial(const DiffVar& v) const;

  std::string to_string(std::span<const std::string> var_names,
                        std::span<const std::string> field_names) const;

 private:
  void check_same(const DiffPoly& other) const;

  DiffFieldConfig cfg_;
  std::size_t n_;
  TermMap terms_;
};

DiffPoly pow(const DiffPoly& base, unsigned exponent);

/// A point of K^n; derivatives of the coordinates come from the field.
struct VarietyPoint {
  std::vector<RatFun> coordinates;
};

/// Substitutes theta y_i -> theta(x_i).
RatFun eval_diffpoly(const DiffPoly& f, const VarietyPoint& x);

/// delta_index applied to f (Leibniz rule, coefficients differentiated too).
DiffPoly formal_derive(const DiffPoly& f, int index);

/// df at x: the coefficient of theta e_i is d f / d(theta y_i) evaluated at x.
ModElement linearize_at_point(const DiffPoly& f, const VarietyPoint& x);

class PointNotOnVariety : public Error {
 public:
  PointNotOnVariety(std::size_t equation_index, const std::string& value)
      : Error("equation " + std::to_string(equation_index + 1) +
              " does not vanish at the point (value " + value + ")"),
        equation_index_(equation_index),
        value_(value) {}

  std::size_t equation_index() const { return equation_index_; }
  const std::string& value() const { return value_; }

 private:
  std::size_t equation_index_;
  std::string value_;
};

struct TangentReport {
  std::vector<ModElement> linearizations;
  /// Characteristic set under the requested ranking.
  CharSet charset;
  /// Always computed under the orderly ranking with the same component order.
  DimensionReport dimension;
  /// Present only for m = 1.
  std::optional<TangentClass> tangent;
};

/// Linearizes every equation at x, completes the generated submodule and
/// reports its dimension data and (m = 1) the tangent classification.
TangentReport tangent_pipeline(std::span<const DiffPoly> eqs, const VarietyPoint& x,
                               const Ranking& rk);

}  // namespace lindiff
