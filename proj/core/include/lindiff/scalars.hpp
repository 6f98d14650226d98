#pragma once

// Exact arithmetic in the differential field K = Q(t1, ..., tv) equipped with
// m commuting derivations. Derivation i acts as d/dti for i < v and as zero
// otherwise.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace lindiff {

using Rational = mpq_class;
using Integer = mpz_class;

class DiffFieldConfig {
 public:
  /// Throws std::invalid_argument unless num_derivations >= 1 and
  /// 0 <= num_vars <= num_derivations.
  DiffFieldConfig(int num_derivations, int num_vars);

  int num_derivations() const { return m_; }
  int num_vars() const { return v_; }

  bool operator==(const DiffFieldConfig&) const = default;

 private:
  int m_;
  int v_;
};

std::string to_string(const DiffFieldConfig& cfg);

/// Exponent vector of a monomial in t1..tv.
using Exponent = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q. Terms are kept in lexicographic
/// order with t1 most significant; no zero coefficients are stored.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit MPoly(int num_vars = 0) : num_vars_(num_vars) {}
  static MPoly constant(int num_vars, const Rational& c);
  static MPoly variable(int num_vars, int index);
  static MPoly monomial(Exponent exps, const Rational& c);

  int num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; meaningful when is_constant().
  Rational constant_value() const;

  /// Lex-leading term. Undefined for the zero polynomial.
  const TermMap::value_type& leading() const { return *terms_.rbegin(); }

  /// -1 for the zero polynomial.
  int degree_in(int var) const;
  int total_degree() const;
  bool involves(int var) const { return degree_in(var) > 0; }

  void add_term(const Exponent& exps, const Rational& c);

  MPoly derivative(int var) const;
  Rational evaluate(std::span<const Rational> point) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  int num_vars_;
  TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);

/// Greatest common divisor, normalized so the lex-leading coefficient is 1.
/// gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Same result as gcd, always by the subresultant remainder sequence. Slower;
/// gcd falls back to it when the heuristic path gives up.
MPoly gcd_prs(const MPoly& a, const MPoly& b);

/// Default printable names of the field variables: `t` when v = 1,
/// `t1..tv` otherwise.
std::vector<std::string> default_field_names(int num_vars);

/// Element of K. The fraction is kept canonical: numerator and denominator
/// coprime, denominator with lex-leading coefficient 1, zero stored as 0/1.
/// Canonical forms of equal values are identical.
class RatFun {
 public:
  explicit RatFun(DiffFieldConfig cfg);
  RatFun(DiffFieldConfig cfg, const Rational& c);
  RatFun(DiffFieldConfig cfg, long c) : RatFun(cfg, Rational(c)) {}

  /// Throws DivisionByZero when den is zero.
  static RatFun normalize(DiffFieldConfig cfg, MPoly num, MPoly den);
  static RatFun variable(DiffFieldConfig cfg, int index);

  const DiffFieldConfig& config() const { return cfg_; }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Throws DivisionByZero for zero.
  RatFun inverse() const;

  /// Derivation with 0-based index; zero when index >= v. Throws
  /// BadDerivation when index is outside [0, m).
  RatFun derive(int index) const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& other);
  RatFun& operator-=(const RatFun& other);
  RatFun& operator*=(const RatFun& other);
  RatFun& operator/=(const RatFun& other);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun&, const RatFun&) = default;

  /// Prints in the textual expression grammar; re-parses to an equal value.
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  RatFun(DiffFieldConfig cfg, MPoly num, MPoly den)
      : cfg_(cfg), num_(std::move(num)), den_(std::move(den)) {}
  /// Skips the gcd: num and den must already be coprime.
  static RatFun coprime(DiffFieldConfig cfg, MPoly num, MPoly den);
  void check_same(const RatFun& other) const;

  DiffFieldConfig cfg_;
  MPoly num_;
  MPoly den_;
};

enum class ArithOp { add, sub, mul, div };

RatFun arith(ArithOp op, const RatFun& a, const RatFun& b);
RatFun derive(const RatFun& a, int index);
RatFun pow(const RatFun& base, int exponent);

std::ostream& operator<<(std::ostream& os, const MPoly& p);
std::ostream& operator<<(std::ostream& os, const RatFun& a);

}  // namespace lindiff
