#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>

namespace lindiff::testing {

namespace {

Integer binomial(std::uint32_t n, std::uint32_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t out = 1;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = mul_mod(out, a);
    a = mul_mod(a, a);
  }
  return out;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

std::optional<std::uint64_t> rational_mod(const Rational& c) {
  const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mul_mod(mpz_fdiv_ui(c.get_num_mpz_t(), kPrime), inv_mod(den));
}

std::optional<std::uint64_t> eval_mod(const MPoly& p, const std::vector<std::uint64_t>& point) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : p.terms()) {
    auto term = rational_mod(c);
    if (!term) return std::nullopt;
    std::uint64_t x = *term;
    for (std::size_t i = 0; i < e.size(); ++i) x = mul_mod(x, pow_mod(point[i], e[i]));
    acc = (acc + x) % kPrime;
  }
  return acc;
}

std::size_t modular_rank(std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = inv_mod(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const std::uint64_t factor = kPrime - mul_mod(rows[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        if (rows[rank][j] != 0) rows[r][j] = (rows[r][j] + mul_mod(factor, rows[rank][j])) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

OrePoly leibniz_closed_form(const DerivMonomial& theta, const RatFun& a) {
  const DiffFieldConfig cfg = a.config();
  OrePoly out(cfg);
  for (const auto& sigma : monomials_up_to(theta.size(), theta.ord())) {
    if (!sigma.divides(theta)) continue;
    Integer weight = 1;
    for (std::size_t i = 0; i < theta.size(); ++i) weight *= binomial(theta.exps[i], sigma.exps[i]);
    out.add_term(sigma, RatFun(cfg, Rational(weight)) * apply_monomial(theta / sigma, a));
  }
  return out;
}

std::size_t exact_rank(std::vector<std::vector<RatFun>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const RatFun inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const RatFun factor = rows[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (!rows[rank][j].is_zero()) rows[r][j] -= factor * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t generic_rank(const std::vector<std::vector<RatFun>>& rows, int points) {
  if (rows.empty() || rows.front().empty()) return 0;
  const int v = rows.front().front().config().num_vars();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> pick(0, kPrime - 1);
  std::size_t best = 0;
  for (int done = 0; done < points;) {
    std::vector<std::uint64_t> point;
    for (int i = 0; i < v; ++i) point.push_back(pick(rng));
    bool pole = false;
    std::vector<std::vector<std::uint64_t>> values;
    for (const auto& row : rows) {
      auto& out = values.emplace_back();
      for (const auto& a : row) {
        const auto den = eval_mod(a.den(), point);
        const auto num = eval_mod(a.num(), point);
        if (!den || !num || *den == 0) {
          pole = true;
          break;
        }
        out.push_back(mul_mod(*num, inv_mod(*den)));
      }
      if (pole) break;
    }
    if (pole) continue;
    best = std::max(best, modular_rank(std::move(values)));
    ++done;
    if (v == 0) break;
  }
  return best;
}

std::vector<DerivMonomial> monomials_up_to(std::size_t m, std::uint32_t k) {
  std::vector<DerivMonomial> out;
  DerivMonomial cur(m);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur.exps[i] = e;
      rec(i + 1, left - e);
    }
    cur.exps[i] = 0;
  };
  rec(0, k);
  return out;
}

std::size_t truncated_quotient_dimension(DiffFieldConfig cfg, std::size_t n,
                                         std::span<const ModElement> gens, std::uint32_t k,
                                         std::uint32_t slack, bool exact) {
  const std::size_t m = static_cast<std::size_t>(cfg.num_derivations());
  const std::uint32_t big = k + slack;
  const auto monos = monomials_up_to(m, big);

  // Columns: high-order terms (ord > k) first, then the order <= k slice.
  std::vector<ModTerm> high;
  std::vector<ModTerm> low;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& theta : monos) (theta.ord() > k ? high : low).push_back(ModTerm{i, theta});
  }
  std::map<ModTerm, std::size_t> column;
  for (const auto& t : high) column.emplace(t, column.size());
  for (const auto& t : low) column.emplace(t, column.size());

  std::vector<std::vector<RatFun>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto order = static_cast<std::uint32_t>(g.order());
    if (order > big) continue;
    // tau(c) for every coefficient c of g, one derivation at a time.
    std::map<std::pair<ModTerm, DerivMonomial>, RatFun> derivs;
    const std::function<const RatFun&(const ModTerm&, const RatFun&, const DerivMonomial&)> derivative =
        [&](const ModTerm& term, const RatFun& c, const DerivMonomial& tau) -> const RatFun& {
      const auto key = std::make_pair(term, tau);
      if (auto it = derivs.find(key); it != derivs.end()) return it->second;
      if (tau.ord() == 0) return derivs.emplace(key, c).first->second;
      std::size_t i = 0;
      while (tau.exps[i] == 0) ++i;
      DerivMonomial parent = tau;
      --parent.exps[i];
      RatFun value = derivative(term, c, parent).derive(static_cast<int>(i));
      return derivs.emplace(key, std::move(value)).first->second;
    };
    for (const auto& theta : monos) {
      if (theta.ord() + order > big) continue;
      // theta * g by the closed Leibniz formula, term by term.
      std::vector<RatFun> row(column.size(), RatFun(cfg));
      for (const auto& [term, c] : g.terms()) {
        for (const auto& sigma : monos) {
          if (!sigma.divides(theta)) continue;
          Integer weight = 1;
          for (std::size_t i = 0; i < m; ++i) weight *= binomial(theta.exps[i], sigma.exps[i]);
          row[column.at(ModTerm{term.component, sigma * term.theta})] +=
              RatFun(cfg, Rational(weight)) * derivative(term, c, theta / sigma);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::vector<RatFun>> projected;
  for (const auto& row : rows) projected.emplace_back(row.begin(), row.begin() + high.size());
  const std::size_t in_slice = exact ? exact_rank(rows) - exact_rank(std::move(projected))
                                     : generic_rank(rows) - generic_rank(projected);
  return low.size() - in_slice;
}

UnivariateDivision univariate_divide(const MPoly& a, const MPoly& b) {
  MPoly q(a.num_vars());
  MPoly r = a;
  const int db = b.degree_in(0);
  const Rational lb = b.leading().second;
  while (!r.is_zero() && r.degree_in(0) >= db) {
    const auto& [er, cr] = r.leading();
    Exponent shift{er[0] - static_cast<std::uint32_t>(db)};
    MPoly t = MPoly::monomial(shift, cr / lb);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

}  // namespace lindiff::testing
