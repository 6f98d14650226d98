#include "random_instances.hpp"

#include <algorithm>

#include "oracles.hpp"

namespace lindiff::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

MPoly random_mpoly(Rng& rng, int num_vars, int max_degree, int max_terms) {
  MPoly p(num_vars);
  const int terms = uniform(rng, 1, max_terms);
  for (int k = 0; k < terms; ++k) {
    Exponent e(num_vars, 0);
    int budget = uniform(rng, 0, max_degree);
    for (int i = 0; i < num_vars && budget > 0; ++i) {
      const int x = uniform(rng, 0, budget);
      e[i] = static_cast<std::uint32_t>(x);
      budget -= x;
    }
    std::shuffle(e.begin(), e.end(), rng);
    p.add_term(e, Rational(uniform(rng, -3, 3)));
  }
  return p;
}

RatFun random_ratfun(Rng& rng, DiffFieldConfig cfg, int max_degree, int den_chance) {
  const int v = cfg.num_vars();
  MPoly num = random_mpoly(rng, v, max_degree);
  MPoly den = MPoly::constant(v, Rational(uniform(rng, 1, 3)));
  if (v > 0 && uniform(rng, 1, den_chance) == 1) {
    den = random_mpoly(rng, v, max_degree);
    if (den.is_zero()) den = MPoly::constant(v, Rational(1));
  }
  return RatFun::normalize(cfg, num, den);
}

RatFun random_nonzero_ratfun(Rng& rng, DiffFieldConfig cfg, int max_degree, int den_chance) {
  for (;;) {
    RatFun a = random_ratfun(rng, cfg, max_degree, den_chance);
    if (!a.is_zero()) return a;
  }
}

OrePoly random_ore(Rng& rng, DiffFieldConfig cfg, std::uint32_t max_order, int coeff_degree,
                   int den_chance) {
  const auto monos =
      monomials_up_to(static_cast<std::size_t>(cfg.num_derivations()), max_order);
  OrePoly f(cfg);
  const int terms = uniform(rng, 1, 3);
  for (int k = 0; k < terms; ++k) {
    const auto& theta = monos[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(monos.size()) - 1))];
    f.add_term(theta, random_ratfun(rng, cfg, coeff_degree, den_chance));
  }
  return f;
}

ModElement random_module_element(Rng& rng, DiffFieldConfig cfg, std::size_t n,
                                 std::uint32_t max_order, int max_terms, int coeff_degree) {
  const auto monos =
      monomials_up_to(static_cast<std::size_t>(cfg.num_derivations()), max_order);
  for (;;) {
    ModElement w(cfg, n);
    const int terms = uniform(rng, 1, max_terms);
    for (int k = 0; k < terms; ++k) {
      const auto comp = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      const auto& theta = monos[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(monos.size()) - 1))];
      w.add_term(ModTerm{comp, theta}, random_ratfun(rng, cfg, coeff_degree, 6));
    }
    if (!w.is_zero()) return w;
  }
}

Antichain random_antichain(Rng& rng, std::size_t m, std::size_t components, std::size_t max_size,
                           std::uint32_t max_entry) {
  Antichain e;
  e.m = m;
  e.components.resize(components);
  const auto leq = [](const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  };
  for (auto& set : e.components) {
    const int attempts = uniform(rng, 0, static_cast<int>(max_size) * 2);
    for (int k = 0; k < attempts && set.size() < max_size; ++k) {
      ExponentVector v(m);
      for (auto& x : v) x = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(max_entry)));
      const bool comparable = std::any_of(set.begin(), set.end(), [&](const ExponentVector& w) {
        return leq(w, v) || leq(v, w);
      });
      if (!comparable) set.push_back(v);
    }
  }
  return e;
}

}  // namespace lindiff::testing

namespace lindiff::testing {

DiffPoly random_diffpoly(Rng& rng, DiffFieldConfig cfg, std::size_t n) {
  const auto monos = monomials_up_to(static_cast<std::size_t>(cfg.num_derivations()), 2);
  std::uniform_int_distribution<std::size_t> pick_var(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_theta(0, monos.size() - 1);
  std::uniform_int_distribution<int> factors(0, 2);
  std::uniform_int_distribution<int> terms(1, 3);
  DiffPoly f(cfg, n);
  for (int k = terms(rng); k > 0; --k) {
    DiffPoly mono = DiffPoly::constant(n, random_nonzero_ratfun(rng, cfg, 1));
    for (int j = factors(rng); j > 0; --j) {
      mono = mono * DiffPoly::variable(cfg, n, pick_var(rng), monos[pick_theta(rng)]);
    }
    f += mono;
  }
  return f;
}

}  // namespace lindiff::testing
