#pragma once

// Diagonalization of operator matrices over the Euclidean ring K[delta]
// (one derivation) and the free rank / torsion degree of the presented
// module, which classify the tangent space as K^d x C^k.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lindiff/diffmodule.hpp"
#include "lindiff/ore_algebra.hpp"

namespace lindiff {

/// Dense matrix of operators. As a presentation, row j holds the n components
/// of the j-th relation, and the module is K[delta]^n modulo the left span of
/// the rows. Products are ordinary matrix products in K[delta].
class OreMatrix {
 public:
  OreMatrix(DiffFieldConfig cfg, std::size_t rows, std::size_t cols);
  static OreMatrix identity(DiffFieldConfig cfg, std::size_t n);
  /// One row per relation.
  static OreMatrix from_relations(DiffFieldConfig cfg, std::size_t n,
                                  std::span<const ModElement> relations);

  const DiffFieldConfig& config() const { return cfg_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  OrePoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const OrePoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_diagonal() const;

  friend OreMatrix operator*(const OreMatrix& a, const OreMatrix& b);
  friend bool operator==(const OreMatrix&, const OreMatrix&) = default;

  std::string to_string() const;

 private:
  DiffFieldConfig cfg_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<OrePoly> entries_;
};

/// u * r * v = d with d diagonal; u and v are products of elementary
/// operations whose inverses are accumulated alongside.
struct Diagonalization {
  OreMatrix u;
  OreMatrix d;
  OreMatrix v;
  OreMatrix u_inv;
  OreMatrix v_inv;
};

/// Row operations subtract left multiples (right division), column operations
/// subtract right multiples (left division); the corner entry only ever
/// shrinks in degree. Requires m = 1.
Diagonalization diagonalize(const OreMatrix& r);

struct TangentClass {
  /// Free rank.
  std::size_t d = 0;
  /// K-dimension of the torsion part.
  std::size_t k = 0;
  /// Positive leader orders of a characteristic set of Ext^1(M, K[delta]).
  /// Only their sum is an invariant.
  std::vector<std::size_t> torsion_degrees;
};

/// Classifies K[delta]^cols / (row span of r). Requires m = 1.
TangentClass classify_tangent(const OreMatrix& r);

}  // namespace lindiff
