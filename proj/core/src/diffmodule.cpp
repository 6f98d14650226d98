#include "lindiff/diffmodule.hpp"

#include <ostream>
#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lindiff/errors.hpp"
#include "term_format.hpp"

namespace lindiff {

// ---------------------------------------------------------------------------
// ModElement

ModElement ModElement::basis(DiffFieldConfig cfg, std::size_t rank, std::size_t component,
                             const DerivMonomial& theta) {
  ModElement w(cfg, rank);
  w.add_term(ModTerm{component, theta}, RatFun(cfg, Rational(1)));
  return w;
}

ModElement ModElement::from_operators(std::span<const OrePoly> ops) {
  if (ops.empty()) throw std::invalid_argument("from_operators needs at least one component");
  ModElement w(ops.front().config(), ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (const auto& [theta, c] : ops[i].terms()) w.add_term(ModTerm{i, theta}, c);
  }
  return w;
}

RatFun ModElement::coeff(const ModTerm& term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? RatFun(cfg_) : it->second;
}

int ModElement::order() const {
  int d = -1;
  for (const auto& [term, c] : terms_) d = std::max(d, static_cast<int>(term.theta.ord()));
  return d;
}

void ModElement::add_term(const ModTerm& term, const RatFun& c) {
  if (term.component >= rank_) throw ConfigMismatch("component index outside module rank");
  if (static_cast<int>(term.theta.size()) != cfg_.num_derivations()) {
    throw ConfigMismatch("derivative monomial length does not match m");
  }
  if (!(c.config() == cfg_)) throw ConfigMismatch("coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(term, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OrePoly ModElement::component(std::size_t i) const {
  OrePoly out(cfg_);
  for (const auto& [term, c] : terms_) {
    if (term.component == i) out.add_term(term.theta, c);
  }
  return out;
}

void ModElement::check_same(const ModElement& other) const {
  if (!(cfg_ == other.cfg_) || rank_ != other.rank_) {
    throw ConfigMismatch("module elements from different modules");
  }
}

ModElement ModElement::operator-() const {
  ModElement out(cfg_, rank_);
  for (const auto& [term, c] : terms_) out.terms_.emplace(term, -c);
  return out;
}

ModElement& ModElement::operator+=(const ModElement& other) {
  check_same(other);
  for (const auto& [term, c] : other.terms_) add_term(term, c);
  return *this;
}

ModElement& ModElement::operator-=(const ModElement& other) {
  check_same(other);
  for (const auto& [term, c] : other.terms_) add_term(term, -c);
  return *this;
}

ModElement ModElement::scaled(const RatFun& a) const {
  ModElement out(cfg_, rank_);
  if (a.is_zero()) return out;
  for (const auto& [term, c] : terms_) out.add_term(term, a * c);
  return out;
}

std::vector<std::string> default_component_names(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

std::string to_string(const ModTerm& term, std::span<const std::string> component_names) {
  const std::string& name = component_names[term.component];
  const auto ord = term.theta.ord();
  if (ord == 0) return name;
  if (term.theta.size() == 1 && ord <= 3) return name + std::string(ord, '\'');
  std::string out = name + "_(";
  for (std::size_t i = 0; i < term.theta.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(term.theta.exps[i]);
  }
  return out + ")";
}

std::string ModElement::to_string(std::span<const std::string> component_names,
                                  std::span<const std::string> field_names) const {
  return to_string(component_names, field_names, Ranking::orderly(rank_));
}

std::string ModElement::to_string(std::span<const std::string> component_names,
                                  std::span<const std::string> field_names, const Ranking& rk) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> sorted;
  for (const auto& entry : terms_) sorted.push_back(&entry);
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto* a, const auto* b) { return rk.less(b->first, a->first); });
  std::string out;
  for (const auto* entry : sorted) {
    detail::append_term(out, entry->second, lindiff::to_string(entry->first, component_names),
                        field_names);
  }
  return out;
}

std::string ModElement::to_string() const {
  return to_string(default_component_names(rank_), default_field_names(cfg_.num_vars()));
}

ModElement apply_theta(const DerivMonomial& theta, const ModElement& w) {
  // theta * (c sigma e_i) = (theta * c) sigma e_i
  ModElement out(w.config(), w.rank());
  for (const auto& [term, c] : w.terms()) {
    const OrePoly moved = commute(theta, c);
    for (const auto& [sigma, a] : moved.terms()) {
      out.add_term(ModTerm{term.component, sigma * term.theta}, a);
    }
  }
  return out;
}

ModElement operator*(const OrePoly& f, const ModElement& w) {
  if (!(f.config() == w.config())) throw ConfigMismatch("operator and module over different fields");
  ModElement out(w.config(), w.rank());
  for (const auto& [theta, a] : f.terms()) out += apply_theta(theta, w).scaled(a);
  return out;
}

// ---------------------------------------------------------------------------
// Ranking

Ranking::Ranking(RankingKind kind, std::vector<std::size_t> component_order)
    : kind_(kind), order_(std::move(component_order)), position_(order_.size()) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    const std::size_t c = order_[pos];
    if (c >= order_.size() || seen[c]) {
      throw std::invalid_argument("component order must be a permutation of 0..n-1");
    }
    seen[c] = true;
    position_[c] = pos;
  }
}

namespace {

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace

Ranking Ranking::orderly(std::size_t n) { return Ranking(RankingKind::orderly, identity_order(n)); }

Ranking Ranking::elimination(std::size_t n) {
  return Ranking(RankingKind::elimination, identity_order(n));
}

std::strong_ordering Ranking::compare(const ModTerm& a, const ModTerm& b) const {
  const auto ord_a = a.theta.ord();
  const auto ord_b = b.theta.ord();
  const auto pos_a = position_.at(a.component);
  const auto pos_b = position_.at(b.component);
  if (kind_ == RankingKind::orderly) {
    if (auto c = ord_a <=> ord_b; c != 0) return c;
    if (auto c = pos_a <=> pos_b; c != 0) return c;
  } else {
    if (auto c = pos_a <=> pos_b; c != 0) return c;
    if (auto c = ord_a <=> ord_b; c != 0) return c;
  }
  return a.theta.exps <=> b.theta.exps;
}

// ---------------------------------------------------------------------------
// Leaders and reduction

ModTerm leader(const ModElement& w, const Ranking& rk) {
  if (w.is_zero()) throw ZeroElement("the zero element has no leader");
  const ModTerm* best = nullptr;
  for (const auto& [term, c] : w.terms()) {
    if (best == nullptr || rk.less(*best, term)) best = &term;
  }
  return *best;
}

RatFun initial(const ModElement& w, const Ranking& rk) { return w.coeff(leader(w, rk)); }

ModElement make_monic(const ModElement& w, const Ranking& rk) {
  if (w.is_zero()) return w;
  return w.scaled(initial(w, rk).inverse());
}

bool is_derivative_of(const ModTerm& term, const ModTerm& u) {
  return term.component == u.component && u.theta.divides(term.theta);
}

namespace {

struct RankLess {
  const Ranking* rk;
  bool operator()(const ModTerm& a, const ModTerm& b) const { return rk->less(a, b); }
};

using RankedTerms = std::map<ModTerm, RatFun, RankLess>;

void check_module(const ModElement& w, const Ranking& rk) {
  if (w.rank() != rk.num_components()) {
    throw ConfigMismatch("module rank " + std::to_string(w.rank()) +
                         " does not match ranking over " +
                         std::to_string(rk.num_components()) + " components");
  }
}

ModElement reduce_impl(const ModElement& w, std::span<const ModElement> set, const Ranking& rk,
                       std::vector<OrePoly>* cofactors) {
  check_module(w, rk);
  std::vector<ModTerm> leaders;
  std::vector<RatFun> initials;
  for (const auto& f : set) {
    check_module(f, rk);
    if (!(f.config() == w.config())) throw ConfigMismatch("reducer from another field");
    leaders.push_back(leader(f, rk));
    initials.push_back(f.coeff(leaders.back()));
  }
  if (cofactors != nullptr) cofactors->assign(set.size(), OrePoly(w.config()));

  RankedTerms work(RankLess{&rk});
  for (const auto& [term, c] : w.terms()) work.emplace(term, c);

  std::map<std::pair<std::size_t, DerivMonomial>, ModElement> derived;
  std::optional<ModTerm> bound;
  for (;;) {
    auto it = bound ? work.lower_bound(*bound) : work.end();
    std::optional<std::size_t> reducer;
    while (it != work.begin()) {
      --it;
      for (std::size_t j = 0; j < leaders.size(); ++j) {
        if (is_derivative_of(it->first, leaders[j])) {
          reducer = j;
          break;
        }
      }
      if (reducer) break;
    }
    if (!reducer) break;

    const ModTerm target = it->first;
    const RatFun factor = it->second / initials[*reducer];
    const DerivMonomial theta = target.theta / leaders[*reducer].theta;
    auto key = std::make_pair(*reducer, theta);
    auto found = derived.find(key);
    if (found == derived.end()) {
      found = derived.emplace(key, apply_theta(theta, set[*reducer])).first;
    }
    for (const auto& [term, c] : found->second.terms()) {
      auto [slot, inserted] = work.try_emplace(term, -(factor * c));
      if (!inserted) {
        slot->second -= factor * c;
        if (slot->second.is_zero()) work.erase(slot);
      }
    }
    if (cofactors != nullptr) (*cofactors)[*reducer].add_term(theta, factor);
    bound = target;
  }

  ModElement out(w.config(), w.rank());
  for (const auto& [term, c] : work) out.add_term(term, c);
  return out;
}

}  // namespace

ModElement reduce(const ModElement& w, std::span<const ModElement> set, const Ranking& rk) {
  return reduce_impl(w, set, rk, nullptr);
}

Reduction reduce_with_cofactors(const ModElement& w, std::span<const ModElement> set,
                                const Ranking& rk) {
  std::vector<OrePoly> cofactors;
  ModElement r = reduce_impl(w, set, rk, &cofactors);
  return Reduction{std::move(r), std::move(cofactors)};
}

// ---------------------------------------------------------------------------
// Autoreduced sets

std::vector<ModTerm> AutoreducedSet::leaders() const {
  std::vector<ModTerm> out;
  for (const auto& f : elements) out.push_back(leader(f, ranking));
  return out;
}

namespace {

bool contains_derivative_of(const ModElement& w, const ModTerm& u) {
  return std::any_of(w.terms().begin(), w.terms().end(),
                     [&](const auto& entry) { return is_derivative_of(entry.first, u); });
}

void sort_by_leader(std::vector<ModElement>& elems, const Ranking& rk) {
  std::stable_sort(elems.begin(), elems.end(), [&](const ModElement& a, const ModElement& b) {
    return rk.less(leader(a, rk), leader(b, rk));
  });
}

}  // namespace

AutoreducedSet autoreduce(DiffFieldConfig cfg, std::span<const ModElement> s, const Ranking& rk) {
  std::vector<ModElement> pending;
  for (const auto& w : s) {
    if (!(w.config() == cfg)) throw ConfigMismatch("element from another field");
    check_module(w, rk);
    if (!w.is_zero()) pending.push_back(w);
  }
  std::vector<ModElement> basis;
  while (!pending.empty()) {
    auto lowest = pending.begin();
    ModTerm lowest_leader = leader(*lowest, rk);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      ModTerm u = leader(*it, rk);
      if (rk.less(u, lowest_leader)) {
        lowest = it;
        lowest_leader = u;
      }
    }
    ModElement h = reduce(*lowest, basis, rk);
    pending.erase(lowest);
    if (h.is_zero()) continue;
    h = make_monic(h, rk);
    const ModTerm u = leader(h, rk);
    std::vector<ModElement> kept;
    for (auto& b : basis) {
      if (contains_derivative_of(b, u)) {
        pending.push_back(std::move(b));
      } else {
        kept.push_back(std::move(b));
      }
    }
    basis = std::move(kept);
    basis.push_back(std::move(h));
  }
  sort_by_leader(basis, rk);
  return AutoreducedSet{cfg, rk, std::move(basis)};
}

bool is_autoreduced(const AutoreducedSet& a) {
  const auto& rk = a.ranking;
  std::vector<ModTerm> leaders;
  for (const auto& f : a.elements) {
    if (f.is_zero()) return false;
    leaders.push_back(leader(f, rk));
    if (!f.coeff(leaders.back()).is_one()) return false;
  }
  for (std::size_t i = 1; i < leaders.size(); ++i) {
    if (!rk.less(leaders[i - 1], leaders[i])) return false;
  }
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    for (std::size_t j = 0; j < a.elements.size(); ++j) {
      if (i != j && contains_derivative_of(a.elements[i], leaders[j])) return false;
    }
  }
  return true;
}

RankComparison compare_autoreduced(const AutoreducedSet& a, const AutoreducedSet& b) {
  if (!(a.ranking == b.ranking)) throw ConfigMismatch("autoreduced sets under different rankings");
  const auto la = a.leaders();
  const auto lb = b.leaders();
  const std::size_t common = std::min(la.size(), lb.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto c = a.ranking.compare(la[i], lb[i]);
    if (c < 0) return RankComparison::lower;
    if (c > 0) return RankComparison::higher;
  }
  if (la.size() > lb.size()) return RankComparison::lower;
  if (la.size() < lb.size()) return RankComparison::higher;
  return RankComparison::equal;
}

// ---------------------------------------------------------------------------
// Evaluation and membership

RatFun eval_point(const ModElement& w, std::span<const RatFun> x) {
  if (x.size() != w.rank()) {
    throw ConfigMismatch("point has " + std::to_string(x.size()) + " coordinates, module rank is " +
                         std::to_string(w.rank()));
  }
  RatFun out(w.config());
  for (const auto& [term, c] : w.terms()) {
    if (!(x[term.component].config() == w.config())) {
      throw ConfigMismatch("point coordinate from another field");
    }
    out += c * apply_monomial(term.theta, x[term.component]);
  }
  return out;
}

bool member(const ModElement& w, const CharSet& c) {
  if (!c.complete) throw std::invalid_argument("membership requires a complete characteristic set");
  return reduce(w, c.elements(), c.ranking()).is_zero();
}

}  // namespace lindiff

namespace lindiff {

std::ostream& operator<<(std::ostream& os, const ModTerm& term) {
  return os << to_string(term, default_component_names(term.component + 1));
}

std::ostream& operator<<(std::ostream& os, const ModElement& w) { return os << w.to_string(); }

}  // namespace lindiff
