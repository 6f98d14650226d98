#include <algorithm>
#include <map>
#include <tuple>

#include "lindiff/diffmodule.hpp"
#include "lindiff/errors.hpp"

namespace lindiff {

std::optional<ModElement> s_pair(const ModElement& f, const ModElement& g, const Ranking& rk) {
  const ModTerm uf = leader(f, rk);
  const ModTerm ug = leader(g, rk);
  if (uf.component != ug.component) return std::nullopt;
  const DerivMonomial top = lcm(uf.theta, ug.theta);
  ModElement lhs = apply_theta(top / uf.theta, f).scaled(f.coeff(uf).inverse());
  ModElement rhs = apply_theta(top / ug.theta, g).scaled(g.coeff(ug).inverse());
  return lhs - rhs;
}

namespace {

// Fraction-free helpers. Elements are kept with polynomial, jointly coprime
// coefficients, so field arithmetic never needs a gcd on the hot path.

RatFun poly(DiffFieldConfig cfg, MPoly p) {
  return RatFun::normalize(cfg, std::move(p), MPoly::constant(cfg.num_vars(), Rational(1)));
}

ModElement primitive_part(const ModElement& w) {
  if (w.is_zero()) return w;
  const DiffFieldConfig& cfg = w.config();
  MPoly common_den = MPoly::constant(cfg.num_vars(), Rational(1));
  for (const auto& [term, a] : w.terms()) {
    if (!a.den().is_constant()) common_den = common_den * divide_exact(a.den(), gcd(common_den, a.den()));
  }
  MPoly content(cfg.num_vars());
  for (const auto& [term, a] : w.terms()) {
    content = gcd(content, a.num() * divide_exact(common_den, a.den()));
    if (content.is_constant()) break;
  }
  const RatFun scale = RatFun::normalize(cfg, common_den, content);
  return scale.is_one() ? w : w.scaled(scale);
}

// a * f - b * g with polynomial a, b cancelling the leaders.
ModElement cancel(const ModElement& f, const MPoly& cf, const ModElement& g, const MPoly& cg) {
  const MPoly h = gcd(cf, cg);
  const DiffFieldConfig& cfg = f.config();
  return f.scaled(poly(cfg, divide_exact(cg, h))) - g.scaled(poly(cfg, divide_exact(cf, h)));
}

ModElement ff_spair(const ModElement& f, const ModElement& g, const Ranking& rk) {
  const ModTerm uf = leader(f, rk);
  const ModTerm ug = leader(g, rk);
  const DerivMonomial top = lcm(uf.theta, ug.theta);
  return primitive_part(cancel(apply_theta(top / uf.theta, f), f.coeff(uf).num(),
                               apply_theta(top / ug.theta, g), g.coeff(ug).num()));
}

// Full reduction up to a unit of K. `set` holds primitive elements.
ModElement ff_reduce(const ModElement& w, const std::vector<ModElement>& set, const Ranking& rk) {
  std::vector<ModTerm> leaders;
  for (const auto& f : set) leaders.push_back(leader(f, rk));
  std::map<std::pair<std::size_t, DerivMonomial>, ModElement> derived;
  ModElement r = primitive_part(w);
  for (;;) {
    std::optional<std::pair<ModTerm, std::size_t>> target;
    for (const auto& [term, c] : r.terms()) {
      if (target && !rk.less(target->first, term)) continue;
      for (std::size_t j = 0; j < leaders.size(); ++j) {
        if (is_derivative_of(term, leaders[j])) {
          target.emplace(term, j);
          break;
        }
      }
    }
    if (!target) return r;
    const auto& [term, j] = *target;
    const DerivMonomial theta = term.theta / leaders[j].theta;
    auto key = std::make_pair(j, theta);
    auto found = derived.find(key);
    if (found == derived.end()) found = derived.emplace(key, apply_theta(theta, set[j])).first;
    r = primitive_part(cancel(r, r.coeff(term).num(), found->second, set[j].coeff(leaders[j]).num()));
  }
}

// Interreduction with the same loop shape as autoreduce; the output is
// primitive, not monic.
std::vector<ModElement> ff_autoreduce(std::vector<ModElement> pending, const Ranking& rk) {
  std::erase_if(pending, [](const ModElement& w) { return w.is_zero(); });
  std::vector<ModElement> basis;
  while (!pending.empty()) {
    auto lowest = pending.begin();
    ModTerm lowest_leader = leader(*lowest, rk);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const ModTerm u = leader(*it, rk);
      if (rk.less(u, lowest_leader)) {
        lowest = it;
        lowest_leader = u;
      }
    }
    ModElement h = ff_reduce(*lowest, basis, rk);
    pending.erase(lowest);
    if (h.is_zero()) continue;
    const ModTerm u = leader(h, rk);
    std::vector<ModElement> kept;
    for (auto& b : basis) {
      const bool hit = std::any_of(b.terms().begin(), b.terms().end(),
                                   [&](const auto& entry) { return is_derivative_of(entry.first, u); });
      (hit ? pending : kept).push_back(std::move(b));
    }
    basis = std::move(kept);
    basis.push_back(std::move(h));
  }
  return basis;
}

struct PendingPair {
  ModTerm lcm_term;
  std::size_t first;
  std::size_t second;
};

void add_pairs(std::vector<PendingPair>& pairs, const std::vector<ModElement>& basis,
               const std::vector<bool>& live, std::size_t fresh, const Ranking& rk) {
  const ModTerm u = leader(basis[fresh], rk);
  for (std::size_t i = 0; i < fresh; ++i) {
    if (!live[i]) continue;
    const ModTerm v = leader(basis[i], rk);
    if (v.component != u.component) continue;
    pairs.push_back(PendingPair{ModTerm{u.component, lcm(u.theta, v.theta)}, i, fresh});
  }
}

}  // namespace

CharSet characteristic_set(DiffFieldConfig cfg, std::span<const ModElement> gens,
                           const Ranking& rk) {
  for (const auto& g : gens) {
    if (!(g.config() == cfg)) throw ConfigMismatch("generator from another field");
    if (g.rank() != rk.num_components()) throw ConfigMismatch("generator rank does not match ranking");
  }

  std::vector<ModElement> basis =
      ff_autoreduce(std::vector<ModElement>(gens.begin(), gens.end()), rk);
  std::vector<bool> live(basis.size(), true);
  std::vector<PendingPair> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(pairs, basis, live, j, rk);

  // Normal selection: smallest lcm term first, ties by creation order.
  const auto pair_less = [&](const PendingPair& a, const PendingPair& b) {
    if (auto c = rk.compare(a.lcm_term, b.lcm_term); c != 0) return c < 0;
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  };
  while (!pairs.empty()) {
    auto next = std::min_element(pairs.begin(), pairs.end(), pair_less);
    const PendingPair pair = *next;
    pairs.erase(next);
    if (!live[pair.first] || !live[pair.second]) continue;
    std::vector<ModElement> reducers;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (live[i]) reducers.push_back(basis[i]);
    }
    ModElement r = ff_reduce(ff_spair(basis[pair.first], basis[pair.second], rk), reducers, rk);
    if (r.is_zero()) continue;
    // A live element whose leader is a derivative of the new one is replaced
    // by its remainder, which re-enters as a fresh element.
    const ModTerm u = leader(r, rk);
    basis.push_back(std::move(r));
    live.push_back(true);
    add_pairs(pairs, basis, live, basis.size() - 1, rk);
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
      if (!live[i] || !is_derivative_of(leader(basis[i], rk), u)) continue;
      live[i] = false;
      std::vector<ModElement> others;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (live[j]) others.push_back(basis[j]);
      }
      ModElement rest = ff_reduce(basis[i], others, rk);
      if (rest.is_zero()) continue;
      basis.push_back(std::move(rest));
      live.push_back(true);
      add_pairs(pairs, basis, live, basis.size() - 1, rk);
    }
  }

  std::vector<ModElement> survivors;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (live[i]) survivors.push_back(std::move(basis[i]));
  }
  std::vector<ModElement> monic;
  for (const auto& w : ff_autoreduce(std::move(survivors), rk)) monic.push_back(make_monic(w, rk));
  CharSet out{autoreduce(cfg, monic, rk), std::vector<ModElement>(gens.begin(), gens.end()), false};
  out.complete = verify_complete(out);
  if (!out.complete) throw std::logic_error("characteristic set completion failed verification");
  return out;
}

bool verify_complete(const CharSet& c) {
  const auto& rk = c.ranking();
  const auto& elems = c.elements();
  if (!is_autoreduced(c.set)) return false;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      auto s = s_pair(elems[i], elems[j], rk);
      if (s && !reduce(*s, elems, rk).is_zero()) return false;
    }
  }
  return std::all_of(c.generators.begin(), c.generators.end(),
                     [&](const ModElement& g) { return reduce(g, elems, rk).is_zero(); });
}

}  // namespace lindiff
