#include "lindiff/dimension.hpp"

#include <stdexcept>

#include "lindiff/errors.hpp"

namespace lindiff {

Antichain leader_antichain(const CharSet& c) {
  Antichain e;
  e.m = static_cast<std::size_t>(c.set.config.num_derivations());
  e.components.resize(c.rank());
  for (const auto& u : c.set.leaders()) e.components[u.component].push_back(u.theta.exps);
  return e;
}

NumericalPolynomial dimension_polynomial(const CharSet& c) {
  if (!c.ranking().is_orderly()) throw OrderlyRequired("dimension_polynomial");
  return count_cofilter(leader_antichain(c));
}

namespace {

std::vector<std::size_t> leaderless_components(const CharSet& c) {
  std::vector<bool> led(c.rank(), false);
  for (const auto& u : c.set.leaders()) led[u.component] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < led.size(); ++i) {
    if (!led[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

Integer diff_dimension(const CharSet& c) {
  const NumericalPolynomial phi = dimension_polynomial(c);
  const Integer from_poly = phi.binomial_coeff(static_cast<std::size_t>(c.set.config.num_derivations()));
  const Integer from_leaders = static_cast<unsigned long>(leaderless_components(c).size());
  if (from_poly != from_leaders) {
    throw std::logic_error("differential dimension mismatch between polynomial and leaders");
  }
  return from_poly;
}

FreeSplit free_split(const CharSet& c) {
  if (c.set.config.num_derivations() != 1) throw UnsupportedForPartial("free_split");
  if (!c.ranking().is_orderly()) throw OrderlyRequired("free_split");
  FreeSplit out{leaderless_components(c), 0};
  // With one derivation each led component carries exactly one leader
  // delta^k e_i; the terms below it are e_i, ..., delta^(k-1) e_i.
  for (const auto& u : c.set.leaders()) out.below_leader_count += u.theta.ord();
  return out;
}

DimensionReport dimension_report(const CharSet& c) {
  DimensionReport r;
  r.dimpoly = dimension_polynomial(c);
  r.diff_dimension = diff_dimension(c);
  const auto th = type_and_heights(r.dimpoly, c.set.config.num_derivations());
  r.type = th.type;
  r.typical_height = th.typical_height;
  r.free_components = leaderless_components(c);
  if (c.set.config.num_derivations() == 1) {
    const FreeSplit split = free_split(c);
    r.below_leader_count = split.below_leader_count;
    // phi(t) = a1 (t + 1) + a0, so r = a1 + a0.
    r.free_term = r.dimpoly.binomial_coeff(0) + r.dimpoly.binomial_coeff(1);
  }
  return r;
}

}  // namespace lindiff
