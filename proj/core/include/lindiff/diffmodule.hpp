#pragma once

// Free differential modules K[Delta]^n: rankings of derivative terms,
// reduction, autoreduced sets and characteristic sets of submodules.

#include <compare>
#include <iosfwd>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lindiff/ore_algebra.hpp"
#include "lindiff/scalars.hpp"

namespace lindiff {

/// The derivative term theta e_i (component is 0-based).
struct ModTerm {
  std::size_t component = 0;
  DerivMonomial theta;

  auto operator<=>(const ModTerm&) const = default;
};

class Ranking;

/// Element of K[Delta]^n, i.e. a linear differential function on K^n.
class ModElement {
 public:
  using TermMap = std::map<ModTerm, RatFun>;

  ModElement(DiffFieldConfig cfg, std::size_t rank) : cfg_(cfg), rank_(rank) {}
  /// theta e_component with coefficient 1.
  static ModElement basis(DiffFieldConfig cfg, std::size_t rank, std::size_t component,
                          const DerivMonomial& theta);
  /// sum_i ops[i] e_i.
  static ModElement from_operators(std::span<const OrePoly> ops);

  const DiffFieldConfig& config() const { return cfg_; }
  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFun coeff(const ModTerm& term) const;
  /// Highest ord among the terms; -1 for zero.
  int order() const;

  void add_term(const ModTerm& term, const RatFun& c);

  /// Operator in component i: the xi_i with w = sum xi_i e_i.
  OrePoly component(std::size_t i) const;

  ModElement operator-() const;
  ModElement& operator+=(const ModElement& other);
  ModElement& operator-=(const ModElement& other);
  friend ModElement operator+(ModElement a, const ModElement& b) { return a += b; }
  friend ModElement operator-(ModElement a, const ModElement& b) { return a -= b; }
  friend bool operator==(const ModElement&, const ModElement&) = default;

  /// a * w (coefficientwise).
  ModElement scaled(const RatFun& a) const;

  /// Prints as a linear differential expression in the component names,
  /// e.g. `t*y' + z - y` (m = 1) or `y_(1,0) - z` (m >= 2).
  std::string to_string(std::span<const std::string> component_names,
                        std::span<const std::string> field_names) const;
  /// Terms in decreasing order under rk instead of the orderly ranking.
  std::string to_string(std::span<const std::string> component_names,
                        std::span<const std::string> field_names, const Ranking& rk) const;
  std::string to_string() const;

 private:
  void check_same(const ModElement& other) const;

  DiffFieldConfig cfg_;
  std::size_t rank_;
  TermMap terms_;
};

/// Default component names e1..en.
std::vector<std::string> default_component_names(std::size_t rank);
std::string to_string(const ModTerm& term, std::span<const std::string> component_names);

/// Left action of the operator ring: f * w.
ModElement operator*(const OrePoly& f, const ModElement& w);

std::ostream& operator<<(std::ostream& os, const ModTerm& term);
std::ostream& operator<<(std::ostream& os, const ModElement& w);
/// theta * w.
ModElement apply_theta(const DerivMonomial& theta, const ModElement& w);

enum class RankingKind { orderly, elimination };

/// Total order on derivative terms compatible with the action of derivative
/// monomials. Orderly: order first, then component, then lexicographic on
/// exponents. Elimination: component first, then order, then lexicographic.
class Ranking {
 public:
  /// component_order lists the components from lowest to highest; it must be
  /// a permutation of 0..n-1.
  Ranking(RankingKind kind, std::vector<std::size_t> component_order);
  static Ranking orderly(std::size_t n);
  static Ranking elimination(std::size_t n);

  RankingKind kind() const { return kind_; }
  bool is_orderly() const { return kind_ == RankingKind::orderly; }
  std::size_t num_components() const { return position_.size(); }
  const std::vector<std::size_t>& component_order() const { return order_; }

  std::strong_ordering compare(const ModTerm& a, const ModTerm& b) const;
  bool less(const ModTerm& a, const ModTerm& b) const { return compare(a, b) < 0; }

  bool operator==(const Ranking& other) const {
    return kind_ == other.kind_ && order_ == other.order_;
  }

 private:
  RankingKind kind_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
};

/// Throws ZeroElement for w = 0.
ModTerm leader(const ModElement& w, const Ranking& rk);
/// Coefficient of the leader.
RatFun initial(const ModElement& w, const Ranking& rk);
/// w divided by its leader coefficient.
ModElement make_monic(const ModElement& w, const Ranking& rk);

/// True when `term` is a derivative theta * u for the leader u of some element
/// (theta may be the identity).
bool is_derivative_of(const ModTerm& term, const ModTerm& u);

/// Normal form of w modulo the set: no term of the result is a derivative of
/// any leader in the set. Highest reducible term is always cancelled first;
/// among reducers, the first in set order wins.
ModElement reduce(const ModElement& w, std::span<const ModElement> set, const Ranking& rk);

struct Reduction {
  ModElement remainder;
  /// w = sum_j cofactors[j] * set[j] + remainder.
  std::vector<OrePoly> cofactors;
};

Reduction reduce_with_cofactors(const ModElement& w, std::span<const ModElement> set,
                                const Ranking& rk);

/// Monic elements sorted by increasing leader, pairwise reduced.
struct AutoreducedSet {
  DiffFieldConfig config;
  Ranking ranking;
  std::vector<ModElement> elements;

  std::vector<ModTerm> leaders() const;
  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
};

/// Interreduces S: the result spans the same submodule, each element monic and
/// free of every derivative of the other leaders.
AutoreducedSet autoreduce(DiffFieldConfig cfg, std::span<const ModElement> s, const Ranking& rk);

/// Checks the autoreduced-set invariants (monic, sorted, pairwise reduced).
bool is_autoreduced(const AutoreducedSet& a);

enum class RankComparison { lower, equal, higher };

/// Rank order of autoreduced sets. Throws ConfigMismatch when the rankings
/// differ.
RankComparison compare_autoreduced(const AutoreducedSet& a, const AutoreducedSet& b);

struct CharSet {
  AutoreducedSet set;
  std::vector<ModElement> generators;
  /// Every S-pair of `set` and every generator reduces to zero modulo `set`.
  bool complete = false;

  const Ranking& ranking() const { return set.ranking; }
  std::size_t rank() const { return set.ranking.num_components(); }
  const std::vector<ModElement>& elements() const { return set.elements; }
};

/// Cross-multiplied difference of two elements whose leaders share a
/// component, formed at the exponentwise max of the leader monomials.
/// std::nullopt when the leaders sit on different components.
std::optional<ModElement> s_pair(const ModElement& f, const ModElement& g, const Ranking& rk);

/// Characteristic set of the submodule generated by `gens`, computed by
/// completing under S-pairs (normal selection strategy) and interreducing.
/// The ranking fixes the module rank n.
CharSet characteristic_set(DiffFieldConfig cfg, std::span<const ModElement> gens,
                           const Ranking& rk);

/// Verifies the completeness condition of a CharSet directly.
bool verify_complete(const CharSet& c);

/// xi(x) = sum_i xi_i(x_i). Throws ConfigMismatch on length mismatch.
RatFun eval_point(const ModElement& w, std::span<const RatFun> x);

/// Membership in the submodule presented by a complete CharSet.
bool member(const ModElement& w, const CharSet& c);

}  // namespace lindiff
