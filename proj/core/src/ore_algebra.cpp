#include "lindiff/ore_algebra.hpp"

#include <ostream>
#include <numeric>
#include <sstream>

#include "lindiff/errors.hpp"
#include "term_format.hpp"

namespace lindiff {

DerivMonomial DerivMonomial::delta(std::size_t m, std::size_t index, std::uint32_t power) {
  DerivMonomial theta(m);
  theta.exps.at(index) = power;
  return theta;
}

std::uint32_t DerivMonomial::ord() const {
  return std::accumulate(exps.begin(), exps.end(), std::uint32_t{0});
}

bool DerivMonomial::divides(const DerivMonomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

DerivMonomial DerivMonomial::operator*(const DerivMonomial& other) const {
  DerivMonomial out(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] = exps[i] + other.exps[i];
  return out;
}

DerivMonomial DerivMonomial::operator/(const DerivMonomial& divisor) const {
  DerivMonomial out(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] = exps[i] - divisor.exps[i];
  return out;
}

DerivMonomial lcm(const DerivMonomial& a, const DerivMonomial& b) {
  DerivMonomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.exps[i] = std::max(a.exps[i], b.exps[i]);
  return out;
}

std::string to_string(const DerivMonomial& theta) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const auto k = theta.exps[i];
    if (k == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'd';
    if (theta.size() > 1) os << (i + 1);
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

OrePoly::OrePoly(const RatFun& scalar) : cfg_(scalar.config()) {
  add_term(DerivMonomial(cfg_.num_derivations()), scalar);
}

OrePoly OrePoly::monomial(const DerivMonomial& theta, const RatFun& coeff) {
  OrePoly p(coeff.config());
  p.add_term(theta, coeff);
  return p;
}

OrePoly OrePoly::delta(DiffFieldConfig cfg, std::size_t index) {
  return monomial(DerivMonomial::delta(cfg.num_derivations(), index),
                  RatFun(cfg, Rational(1)));
}

int OrePoly::degree() const {
  int d = -1;
  for (const auto& [theta, c] : terms_) d = std::max(d, static_cast<int>(theta.ord()));
  return d;
}

RatFun OrePoly::coeff(const DerivMonomial& theta) const {
  auto it = terms_.find(theta);
  return it == terms_.end() ? RatFun(cfg_) : it->second;
}

RatFun OrePoly::leading_coeff() const {
  if (cfg_.num_derivations() != 1) throw UnsupportedForPartial("leading_coeff");
  if (terms_.empty()) return RatFun(cfg_);
  return terms_.rbegin()->second;
}

void OrePoly::add_term(const DerivMonomial& theta, const RatFun& c) {
  if (!(c.config() == cfg_)) throw ConfigMismatch("operator coefficient from another field");
  if (static_cast<int>(theta.size()) != cfg_.num_derivations()) {
    throw ConfigMismatch("derivative monomial length does not match m");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(theta, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OrePoly OrePoly::operator-() const {
  OrePoly out(cfg_);
  for (const auto& [theta, c] : terms_) out.terms_.emplace(theta, -c);
  return out;
}

OrePoly& OrePoly::operator+=(const OrePoly& other) {
  if (!(cfg_ == other.cfg_)) throw ConfigMismatch("operators over different fields");
  for (const auto& [theta, c] : other.terms_) add_term(theta, c);
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& other) {
  if (!(cfg_ == other.cfg_)) throw ConfigMismatch("operators over different fields");
  for (const auto& [theta, c] : other.terms_) add_term(theta, -c);
  return *this;
}

OrePoly OrePoly::scaled(const RatFun& a) const {
  OrePoly out(cfg_);
  if (a.is_zero()) return out;
  for (const auto& [theta, c] : terms_) out.add_term(theta, a * c);
  return out;
}

OrePoly OrePoly::shifted(const DerivMonomial& theta) const {
  OrePoly out(cfg_);
  for (const auto& [sigma, c] : terms_) out.terms_.emplace(sigma * theta, c);
  return out;
}

std::string OrePoly::to_string(std::span<const std::string> field_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    detail::append_term(out, it->second, lindiff::to_string(it->first), field_names);
  }
  return out;
}

std::string OrePoly::to_string() const {
  return to_string(default_field_names(cfg_.num_vars()));
}

namespace {

// delta_index * p, using delta * (c sigma) = c (delta sigma) + d(c) sigma.
OrePoly left_delta(std::size_t index, const OrePoly& p) {
  OrePoly out(p.config());
  const std::size_t m = static_cast<std::size_t>(p.config().num_derivations());
  const DerivMonomial step = DerivMonomial::delta(m, index);
  for (const auto& [sigma, c] : p.terms()) {
    out.add_term(sigma * step, c);
    out.add_term(sigma, c.derive(static_cast<int>(index)));
  }
  return out;
}

}  // namespace

OrePoly commute(const DerivMonomial& theta, const RatFun& a) {
  OrePoly result(a);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    for (std::uint32_t k = 0; k < theta.exps[i]; ++k) result = left_delta(i, result);
  }
  return result;
}

OrePoly ore_mul(const OrePoly& f, const OrePoly& g) {
  if (!(f.config() == g.config())) throw ConfigMismatch("operators over different fields");
  OrePoly out(f.config());
  for (const auto& [theta, a] : f.terms()) {
    for (const auto& [phi, b] : g.terms()) {
      // a theta b phi = a (theta b) phi
      out += commute(theta, b).shifted(phi).scaled(a);
    }
  }
  return out;
}

OrePoly operator*(const OrePoly& f, const OrePoly& g) { return ore_mul(f, g); }

RatFun apply_monomial(const DerivMonomial& theta, const RatFun& a) {
  RatFun out = a;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    for (std::uint32_t k = 0; k < theta.exps[i]; ++k) {
      out = out.derive(static_cast<int>(i));
      if (out.is_zero()) return out;
    }
  }
  return out;
}

OrePoly adjoint(const OrePoly& f) {
  OrePoly out(f.config());
  for (const auto& [theta, c] : f.terms()) {
    OrePoly piece = commute(theta, c);
    if (theta.ord() % 2 == 1) piece = -piece;
    out += piece;
  }
  return out;
}

RatFun ore_apply(const OrePoly& f, const RatFun& a) {
  if (!(f.config() == a.config())) throw ConfigMismatch("operator and function over different fields");
  RatFun out(a.config());
  for (const auto& [theta, c] : f.terms()) out += c * apply_monomial(theta, a);
  return out;
}

OreDivision ore_divmod(const OrePoly& f, const OrePoly& g, DivisionSide side) {
  if (f.config().num_derivations() != 1) throw UnsupportedForPartial("ore_divmod");
  if (!(f.config() == g.config())) throw ConfigMismatch("operators over different fields");
  if (g.is_zero()) throw DivisionByZero("division by the zero operator");

  const DiffFieldConfig cfg = f.config();
  const int dg = g.degree();
  const RatFun lg = g.leading_coeff();
  OrePoly q(cfg);
  OrePoly r = f;
  while (!r.is_zero() && r.degree() >= dg) {
    const int dr = r.degree();
    // Both (c d^k) g and g (c d^k) have leading coefficient c * lc(g).
    const RatFun c = r.leading_coeff() / lg;
    const OrePoly step =
        OrePoly::monomial(DerivMonomial::delta(1, 0, static_cast<std::uint32_t>(dr - dg)), c);
    q += step;
    r -= side == DivisionSide::right ? ore_mul(step, g) : ore_mul(g, step);
  }
  return {std::move(q), std::move(r)};
}

}  // namespace lindiff

namespace lindiff {

std::ostream& operator<<(std::ostream& os, const DerivMonomial& theta) {
  return os << (theta.is_identity() ? std::string("1") : to_string(theta));
}

std::ostream& operator<<(std::ostream& os, const OrePoly& f) { return os << f.to_string(); }

}  // namespace lindiff
