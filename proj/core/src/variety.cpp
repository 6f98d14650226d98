#include "lindiff/variety.hpp"

#include <algorithm>
#include <set>

#include "term_format.hpp"

namespace lindiff {

DiffPoly DiffPoly::constant(std::size_t num_vars, const RatFun& c) {
  DiffPoly p(c.config(), num_vars);
  p.add_term(DiffMonomial{}, c);
  return p;
}

DiffPoly DiffPoly::variable(DiffFieldConfig cfg, std::size_t num_vars, std::size_t var,
                            const DerivMonomial& theta) {
  if (var >= num_vars) throw ConfigMismatch("differential indeterminate index out of range");
  if (static_cast<int>(theta.size()) != cfg.num_derivations()) {
    throw ConfigMismatch("derivative monomial length does not match m");
  }
  DiffPoly p(cfg, num_vars);
  p.add_term(DiffMonomial{{DiffVar{var, theta}, 1}}, RatFun(cfg, Rational(1)));
  return p;
}

std::vector<DiffVar> DiffPoly::indeterminates() const {
  std::set<DiffVar> seen;
  for (const auto& [mono, c] : terms_) {
    for (const auto& [v, e] : mono) seen.insert(v);
  }
  return {seen.begin(), seen.end()};
}

void DiffPoly::add_term(const DiffMonomial& mono, const RatFun& c) {
  if (!(c.config() == cfg_)) throw ConfigMismatch("coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffPoly::check_same(const DiffPoly& other) const {
  if (!(cfg_ == other.cfg_) || n_ != other.n_) {
    throw ConfigMismatch("differential polynomials from different rings");
  }
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out(cfg_, n_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
  check_same(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) {
  check_same(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

namespace {

DiffMonomial mono_mul(const DiffMonomial& a, const DiffMonomial& b) {
  DiffMonomial out = a;
  for (const auto& [v, e] : b) out[v] += e;
  return out;
}

// mono / v, assuming v occurs.
DiffMonomial mono_drop_one(const DiffMonomial& mono, const DiffVar& v) {
  DiffMonomial out = mono;
  auto it = out.find(v);
  if (--it->second == 0) out.erase(it);
  return out;
}

}  // namespace

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  a.check_same(b);
  DiffPoly out(a.cfg_, a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  }
  return out;
}

DiffPoly pow(const DiffPoly& base, unsigned exponent) {
  DiffPoly result = DiffPoly::constant(base.num_vars(), RatFun(base.config(), Rational(1)));
  for (unsigned k = 0; k < exponent; ++k) result = result * base;
  return result;
}

DiffPoly DiffPoly::scaled(const RatFun& a) const {
  DiffPoly out(cfg_, n_);
  for (const auto& [mono, c] : terms_) out.add_term(mono, a * c);
  return out;
}

DiffPoly DiffPoly::partial(const DiffVar& v) const {
  DiffPoly out(cfg_, n_);
  for (const auto& [mono, c] : terms_) {
    auto it = mono.find(v);
    if (it == mono.end()) continue;
    out.add_term(mono_drop_one(mono, v), c * RatFun(cfg_, Rational(it->second)));
  }
  return out;
}

std::string DiffPoly::to_string(std::span<const std::string> var_names,
                                std::span<const std::string> field_names) const {
  if (terms_.empty()) return "0";
  // Higher total degree first, then reverse monomial order.
  std::vector<TermMap::const_reverse_iterator> order;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) order.push_back(it);
  const auto degree = [](const DiffMonomial& m) {
    std::uint32_t d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return degree(a->first) > degree(b->first);
  });
  std::string out;
  for (const auto& it : order) {
    std::string atom;
    for (const auto& [v, e] : it->first) {
      if (!atom.empty()) atom += "*";
      atom += lindiff::to_string(ModTerm{v.var, v.theta}, var_names);
      if (e > 1) atom += "^" + std::to_string(e);
    }
    detail::append_term(out, it->second, atom, field_names);
  }
  return out;
}

namespace {

void check_point(const DiffPoly& f, const VarietyPoint& x) {
  if (x.coordinates.size() != f.num_vars()) {
    throw ConfigMismatch("point has " + std::to_string(x.coordinates.size()) +
                         " coordinates, expected " + std::to_string(f.num_vars()));
  }
  for (const auto& c : x.coordinates) {
    if (!(c.config() == f.config())) throw ConfigMismatch("point coordinate from another field");
  }
}

}  // namespace

RatFun eval_diffpoly(const DiffPoly& f, const VarietyPoint& x) {
  check_point(f, x);
  std::map<DiffVar, RatFun> values;
  RatFun out(f.config());
  for (const auto& [mono, c] : f.terms()) {
    RatFun term = c;
    for (const auto& [v, e] : mono) {
      auto it = values.find(v);
      if (it == values.end()) {
        it = values.emplace(v, apply_monomial(v.theta, x.coordinates[v.var])).first;
      }
      term *= pow(it->second, static_cast<int>(e));
    }
    out += term;
  }
  return out;
}

DiffPoly formal_derive(const DiffPoly& f, int index) {
  const auto& cfg = f.config();
  if (index < 0 || index >= cfg.num_derivations()) {
    throw BadDerivation("derivation index " + std::to_string(index + 1) + " outside 1.." +
                        std::to_string(cfg.num_derivations()));
  }
  const DerivMonomial step =
      DerivMonomial::delta(static_cast<std::size_t>(cfg.num_derivations()), static_cast<std::size_t>(index));
  DiffPoly out(cfg, f.num_vars());
  for (const auto& [mono, c] : f.terms()) {
    out.add_term(mono, c.derive(index));
    for (const auto& [v, e] : mono) {
      DiffMonomial rest = mono_drop_one(mono, v);
      rest[DiffVar{v.var, v.theta * step}] += 1;
      out.add_term(rest, c * RatFun(cfg, Rational(e)));
    }
  }
  return out;
}

ModElement linearize_at_point(const DiffPoly& f, const VarietyPoint& x) {
  check_point(f, x);
  ModElement out(f.config(), f.num_vars());
  for (const auto& v : f.indeterminates()) {
    out.add_term(ModTerm{v.var, v.theta}, eval_diffpoly(f.partial(v), x));
  }
  return out;
}

TangentReport tangent_pipeline(std::span<const DiffPoly> eqs, const VarietyPoint& x,
                               const Ranking& rk) {
  if (x.coordinates.empty()) throw ConfigMismatch("point without coordinates");
  const DiffFieldConfig cfg = x.coordinates.front().config();
  const std::size_t n = x.coordinates.size();
  if (rk.num_components() != n) throw ConfigMismatch("ranking does not match number of variables");

  std::vector<ModElement> lin;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const RatFun value = eval_diffpoly(eqs[i], x);
    if (!value.is_zero()) throw PointNotOnVariety(i, value.to_string());
    lin.push_back(linearize_at_point(eqs[i], x));
  }

  CharSet charset = characteristic_set(cfg, lin, rk);
  const Ranking orderly(RankingKind::orderly, rk.component_order());
  DimensionReport dim = rk.is_orderly() ? dimension_report(charset)
                                        : dimension_report(characteristic_set(cfg, lin, orderly));
  std::optional<TangentClass> tangent;
  if (cfg.num_derivations() == 1) {
    tangent = classify_tangent(OreMatrix::from_relations(cfg, n, lin));
  }
  return TangentReport{std::move(lin), std::move(charset), std::move(dim), std::move(tangent)};
}

}  // namespace lindiff
