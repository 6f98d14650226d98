#include "lindiff/normalform.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lindiff/errors.hpp"

namespace lindiff {

OreMatrix::OreMatrix(DiffFieldConfig cfg, std::size_t rows, std::size_t cols)
    : cfg_(cfg), rows_(rows), cols_(cols), entries_(rows * cols, OrePoly(cfg)) {}

OreMatrix OreMatrix::identity(DiffFieldConfig cfg, std::size_t n) {
  OreMatrix out(cfg, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = OrePoly(RatFun(cfg, Rational(1)));
  return out;
}

OreMatrix OreMatrix::from_relations(DiffFieldConfig cfg, std::size_t n,
                                    std::span<const ModElement> relations) {
  OreMatrix out(cfg, relations.size(), n);
  for (std::size_t j = 0; j < relations.size(); ++j) {
    if (relations[j].rank() != n || !(relations[j].config() == cfg)) {
      throw ConfigMismatch("relation does not live in the presented free module");
    }
    for (std::size_t i = 0; i < n; ++i) out.at(j, i) = relations[j].component(i);
  }
  return out;
}

bool OreMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

OreMatrix operator*(const OreMatrix& a, const OreMatrix& b) {
  if (a.cols_ != b.rows_ || !(a.cfg_ == b.cfg_)) {
    throw ConfigMismatch("operator matrix shapes do not compose");
  }
  OreMatrix out(a.cfg_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      OrePoly acc(a.cfg_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc += ore_mul(a.at(i, k), b.at(k, j));
      }
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

std::string OreMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) os << ", ";
      os << at(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

// Unit c in K making c * (row) have polynomial, jointly coprime coefficients.
RatFun primitive_scale(const OreMatrix& m, std::size_t row) {
  const DiffFieldConfig& cfg = m.config();
  const int v = cfg.num_vars();
  MPoly common_den = MPoly::constant(v, Rational(1));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& [theta, a] : m.at(row, j).terms()) {
      common_den = common_den * divide_exact(a.den(), gcd(common_den, a.den()));
    }
  }
  MPoly content(v);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& [theta, a] : m.at(row, j).terms()) {
      content = gcd(content, a.num() * divide_exact(common_den, a.den()));
    }
  }
  if (content.is_zero()) return RatFun(cfg, Rational(1));
  return RatFun::normalize(cfg, common_den, content);
}

class Diagonalizer {
 public:
  explicit Diagonalizer(const OreMatrix& r)
      : d_(r),
        u_(OreMatrix::identity(r.config(), r.rows())),
        u_inv_(u_),
        v_(OreMatrix::identity(r.config(), r.cols())),
        v_inv_(v_) {}

  void run() {
    const std::size_t corners = std::min(d_.rows(), d_.cols());
    for (std::size_t p = 0; p < corners; ++p) {
      if (!clear_corner(p)) break;
    }
  }

  Diagonalization result() && {
    return Diagonalization{std::move(u_), std::move(d_), std::move(v_), std::move(u_inv_),
                           std::move(v_inv_)};
  }

 private:
  // Returns false when the remaining submatrix is zero.
  bool clear_corner(std::size_t p) {
    for (;;) {
      for (std::size_t a = p; a < d_.rows(); ++a) row_scale(a, primitive_scale(d_, a));
      if (!move_smallest_to(p)) return false;
      bool clean = true;
      for (std::size_t a = p + 1; a < d_.rows() && clean; ++a) {
        if (d_.at(a, p).is_zero()) continue;
        auto [q, rem] = ore_divmod(d_.at(a, p), d_.at(p, p), DivisionSide::right);
        row_subtract(a, p, q);
        clean = rem.is_zero();
      }
      for (std::size_t c = p + 1; c < d_.cols() && clean; ++c) {
        if (d_.at(p, c).is_zero()) continue;
        auto [q, rem] = ore_divmod(d_.at(p, c), d_.at(p, p), DivisionSide::left);
        col_subtract(c, p, q);
        clean = rem.is_zero();
      }
      // A nonzero remainder has lower degree than the corner; the next
      // pivot search picks it up.
      if (clean) return true;
    }
  }

  bool move_smallest_to(std::size_t p) {
    int best_degree = -1;
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = p; i < d_.rows(); ++i) {
      for (std::size_t j = p; j < d_.cols(); ++j) {
        const int deg = d_.at(i, j).degree();
        if (deg < 0) continue;
        if (best_degree < 0 || deg < best_degree) {
          best_degree = deg;
          bi = i;
          bj = j;
        }
      }
    }
    if (best_degree < 0) return false;
    if (bi != p) row_swap(bi, p);
    if (bj != p) col_swap(bj, p);
    return true;
  }

  // row_a := c * row_a for a unit c of K.
  void row_scale(std::size_t a, const RatFun& c) {
    if (c.is_one()) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) d_.at(a, j) = d_.at(a, j).scaled(c);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(a, j) = u_.at(a, j).scaled(c);
    const OrePoly inv(c.inverse());
    for (std::size_t i = 0; i < u_inv_.rows(); ++i) {
      if (!u_inv_.at(i, a).is_zero()) u_inv_.at(i, a) = ore_mul(u_inv_.at(i, a), inv);
    }
  }

  void row_swap(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_.at(a, j), d_.at(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_.at(a, j), u_.at(b, j));
    for (std::size_t i = 0; i < u_inv_.rows(); ++i) std::swap(u_inv_.at(i, a), u_inv_.at(i, b));
  }

  void col_swap(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_.at(i, a), d_.at(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_.at(i, a), v_.at(i, b));
    for (std::size_t j = 0; j < v_inv_.cols(); ++j) std::swap(v_inv_.at(a, j), v_inv_.at(b, j));
  }

  // row_a -= q * row_b, i.e. left multiplication by E = I - q e_a e_b^T.
  void row_subtract(std::size_t a, std::size_t b, const OrePoly& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) {
      if (!d_.at(b, j).is_zero()) d_.at(a, j) -= ore_mul(q, d_.at(b, j));
    }
    for (std::size_t j = 0; j < u_.cols(); ++j) {
      if (!u_.at(b, j).is_zero()) u_.at(a, j) -= ore_mul(q, u_.at(b, j));
    }
    // E^-1 = I + q e_a e_b^T acts on the right of u_inv: col_b += col_a * q.
    for (std::size_t i = 0; i < u_inv_.rows(); ++i) {
      if (!u_inv_.at(i, a).is_zero()) u_inv_.at(i, b) += ore_mul(u_inv_.at(i, a), q);
    }
  }

  // col_c -= col_b * q, i.e. right multiplication by F = I - e_b q e_c^T.
  void col_subtract(std::size_t c, std::size_t b, const OrePoly& q) {
    if (q.is_zero()) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) {
      if (!d_.at(i, b).is_zero()) d_.at(i, c) -= ore_mul(d_.at(i, b), q);
    }
    for (std::size_t i = 0; i < v_.rows(); ++i) {
      if (!v_.at(i, b).is_zero()) v_.at(i, c) -= ore_mul(v_.at(i, b), q);
    }
    // F^-1 = I + e_b q e_c^T acts on the left of v_inv: row_b += q * row_c.
    for (std::size_t j = 0; j < v_inv_.cols(); ++j) {
      if (!v_inv_.at(c, j).is_zero()) v_inv_.at(b, j) += ore_mul(q, v_inv_.at(c, j));
    }
  }

  OreMatrix d_;
  OreMatrix u_;
  OreMatrix u_inv_;
  OreMatrix v_;
  OreMatrix v_inv_;
};

}  // namespace

Diagonalization diagonalize(const OreMatrix& r) {
  if (r.config().num_derivations() != 1) throw UnsupportedForPartial("diagonalize");
  Diagonalizer worker(r);
  worker.run();
  return std::move(worker).result();
}

TangentClass classify_tangent(const OreMatrix& r) {
  const DiffFieldConfig& cfg = r.config();
  if (cfg.num_derivations() != 1) throw UnsupportedForPartial("classify_tangent");
  const std::size_t n = r.cols();
  TangentClass out;
  out.d = n;
  if (n == 0) return out;

  std::vector<ModElement> rows;
  rows.reserve(r.rows());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::vector<OrePoly> ops;
    for (std::size_t j = 0; j < n; ++j) ops.push_back(r.at(i, j));
    rows.push_back(ModElement::from_operators(ops));
  }
  // Leaders on distinct components: the rows of the charset are independent.
  const CharSet cs = characteristic_set(cfg, rows, Ranking::orderly(n));
  const std::size_t s = cs.elements().size();
  out.d = n - s;
  if (s == 0) return out;

  // Ext^1(M, K[delta]) has K-dimension k. With independent rows it is the
  // column cokernel of the charset matrix; the adjoint turns it into the
  // left module presented by the adjoint transpose.
  std::vector<ModElement> dual;
  dual.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<OrePoly> ops;
    for (const ModElement& g : cs.elements()) ops.push_back(adjoint(g.component(j)));
    dual.push_back(ModElement::from_operators(ops));
  }
  const CharSet dual_cs = characteristic_set(cfg, dual, Ranking::orderly(s));
  const std::vector<ModTerm> leaders = dual_cs.set.leaders();
  if (leaders.size() != s) throw std::logic_error("classify_tangent: dual module is not torsion");
  for (const ModTerm& u : leaders) {
    const std::size_t deg = u.theta.ord();
    if (deg > 0) out.torsion_degrees.push_back(deg);
    out.k += deg;
  }
  return out;
}

}  // namespace lindiff
