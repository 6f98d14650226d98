#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lindiff/lindiff.hpp"

namespace lindiff::testing {

using Rng = std::mt19937_64;

/// Polynomial in t1..tv with small integer coefficients and degree <= max_degree.
MPoly random_mpoly(Rng& rng, int num_vars, int max_degree, int max_terms = 3);

/// Random field element; with probability 1/den_chance it gets a nonconstant
/// denominator.
RatFun random_ratfun(Rng& rng, DiffFieldConfig cfg, int max_degree = 2, int den_chance = 3);

/// Nonzero element.
RatFun random_nonzero_ratfun(Rng& rng, DiffFieldConfig cfg, int max_degree = 2,
                             int den_chance = 3);

OrePoly random_ore(Rng& rng, DiffFieldConfig cfg, std::uint32_t max_order, int coeff_degree = 1,
                   int den_chance = 4);

/// Random nonzero element of K[Delta]^n of order <= max_order, touching at
/// most `max_terms` derivative terms.
ModElement random_module_element(Rng& rng, DiffFieldConfig cfg, std::size_t n,
                                 std::uint32_t max_order, int max_terms = 3, int coeff_degree = 1);

/// Random differential polynomial in n indeterminates: up to three terms,
/// each a product of at most two derivatives of order <= 2.
DiffPoly random_diffpoly(Rng& rng, DiffFieldConfig cfg, std::size_t n);

/// Random antichain with entries <= max_entry.
Antichain random_antichain(Rng& rng, std::size_t m, std::size_t components, std::size_t max_size,
                           std::uint32_t max_entry);

}  // namespace lindiff::testing
