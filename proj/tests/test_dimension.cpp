#include <gtest/gtest.h>

#include <set>

#include "lindiff/dimension.hpp"
#include "lindiff/errors.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

namespace lindiff {
namespace {

const DiffFieldConfig kQt(1, 1);

RatFun t() { return RatFun::variable(kQt, 0); }

ModElement e(std::size_t n, std::size_t i, std::uint32_t k = 0) {
  return ModElement::basis(kQt, n, i, DerivMonomial::delta(1, 0, k));
}

CharSet charset(std::size_t n, std::vector<ModElement> gens) {
  return characteristic_set(kQt, gens, Ranking::orderly(n));
}

TEST(DimensionPolynomial, FreeModule) {
  const CharSet cs = charset(2, {});
  EXPECT_EQ(dimension_polynomial(cs), NumericalPolynomial({0, 2}, 0));
  EXPECT_EQ(diff_dimension(cs), 2);
  const FreeSplit split = free_split(cs);
  EXPECT_EQ(split.free_components, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(split.below_leader_count, 0);
}

TEST(DimensionPolynomial, TangentModuleOfMovingPoint) {
  // Components (z, y): t*dy' + dz - dy.
  const CharSet cs = charset(2, {e(2, 1, 1).scaled(t()) + e(2, 0) - e(2, 1)});
  const NumericalPolynomial phi = dimension_polynomial(cs);
  EXPECT_EQ(phi.to_string(), "t + 2");
  for (std::uint32_t k = 0; k <= 6; ++k) {
    EXPECT_EQ(phi(k), testing::truncated_quotient_dimension(kQt, 2, cs.generators, k, 2));
  }
  EXPECT_EQ(diff_dimension(cs), 1);
}

TEST(DimensionPolynomial, TwoLeaderModuleIsFinite) {
  const CharSet cs = charset(2, {e(2, 0, 1) - e(2, 1), e(2, 1, 1)});
  EXPECT_EQ(dimension_polynomial(cs), NumericalPolynomial({2}, 1));
  EXPECT_EQ(diff_dimension(cs), 0);
  const DimensionReport report = dimension_report(cs);
  EXPECT_EQ(report.type, 0);
  EXPECT_EQ(report.typical_height, 2);
  EXPECT_EQ(report.free_term, 2);
  EXPECT_EQ(report.below_leader_count, 2);
}

TEST(DimensionPolynomial, EliminationRankingRejected) {
  const CharSet cs = characteristic_set(kQt, std::vector{e(2, 0, 1)}, Ranking::elimination(2));
  EXPECT_THROW(dimension_polynomial(cs), OrderlyRequired);
  EXPECT_THROW(diff_dimension(cs), OrderlyRequired);
}

TEST(FreeSplit, Examples) {
  // (z, y), y' - y.
  const FreeSplit a = free_split(charset(2, {e(2, 1, 1) - e(2, 1)}));
  EXPECT_EQ(a.free_components, (std::vector<std::size_t>{0}));
  EXPECT_EQ(a.below_leader_count, 1);

  const FreeSplit b = free_split(charset(1, {e(1, 0, 2)}));
  EXPECT_TRUE(b.free_components.empty());
  EXPECT_EQ(b.below_leader_count, 2);

  const DiffFieldConfig two(2, 2);
  const CharSet partial =
      characteristic_set(two, std::vector<ModElement>{}, Ranking::orderly(1));
  EXPECT_THROW(free_split(partial), UnsupportedForPartial);
}

TEST(DimensionReport, MovingPointFields) {
  const DimensionReport r = dimension_report(charset(2, {e(2, 1, 1) - e(2, 1)}));
  EXPECT_EQ(r.dimpoly.to_string(), "t + 2");
  EXPECT_EQ(r.diff_dimension, 1);
  EXPECT_EQ(r.type, 1);
  EXPECT_EQ(r.typical_height, 1);
  EXPECT_EQ(r.free_components, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.below_leader_count, 1);
  EXPECT_EQ(r.free_term, 2);
}

TEST(DimensionReport, PartialDerivationsLeaveOneDimensionalFieldsEmpty) {
  const DiffFieldConfig two(2, 2);
  const ModElement g = ModElement::basis(two, 1, 0, DerivMonomial({1, 1}));
  const DimensionReport r = dimension_report(characteristic_set(two, std::vector{g}, Ranking::orderly(1)));
  EXPECT_EQ(r.dimpoly.to_string(), "2*t + 1");
  EXPECT_EQ(r.diff_dimension, 0);
  EXPECT_EQ(r.type, 1);
  EXPECT_EQ(r.typical_height, 2);
  EXPECT_FALSE(r.below_leader_count.has_value());
  EXPECT_FALSE(r.free_term.has_value());
}

struct Instance {
  std::size_t n;
  std::vector<ModElement> gens;
};

Instance random_instance(testing::Rng& rng, DiffFieldConfig cfg, std::size_t max_n, std::uint32_t max_order) {
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  std::uniform_int_distribution<std::size_t> pick_g(0, 3);
  Instance in{pick_n(rng), {}};
  const std::size_t count = pick_g(rng);
  for (std::size_t j = 0; j < count; ++j) {
    in.gens.push_back(testing::random_module_element(rng, cfg, in.n, max_order));
  }
  return in;
}

std::uint32_t slack_for(const std::vector<ModElement>& gens) {
  std::uint32_t s = 1;
  for (const auto& g : gens) s += static_cast<std::uint32_t>(g.order());
  return s;
}

class DimensionProperties : public ::testing::TestWithParam<DiffFieldConfig> {};

TEST_P(DimensionProperties, PolynomialMatchesTruncatedLinearAlgebra) {
  const DiffFieldConfig cfg = GetParam();
  const bool ordinary = cfg.num_derivations() == 1;
  testing::Rng rng(61 + static_cast<unsigned>(cfg.num_derivations()));
  for (int iter = 0; iter < (ordinary ? 30 : 8); ++iter) {
    const Instance in = random_instance(rng, cfg, ordinary ? 3 : 2, ordinary ? 3 : 2);
    const CharSet cs = characteristic_set(cfg, in.gens, Ranking::orderly(in.n));
    const NumericalPolynomial phi = dimension_polynomial(cs);
    const std::uint32_t top = ordinary ? 6 : 4;
    for (std::uint32_t k = 0; k <= top; ++k) {
      const std::size_t expected = testing::truncated_quotient_dimension(cfg, in.n, in.gens, k, slack_for(in.gens));
      // The polynomial is only promised on its validity range; the staircase
      // count itself agrees everywhere.
      EXPECT_EQ(brute_count(leader_antichain(cs), k), expected) << "k=" << k;
      if (k >= phi.valid_from()) EXPECT_EQ(phi(k), expected) << "k=" << k;
    }
  }
}

TEST_P(DimensionProperties, DiffDimensionCountsLeaderlessComponents) {
  const DiffFieldConfig cfg = GetParam();
  testing::Rng rng(71 + static_cast<unsigned>(cfg.num_derivations()));
  for (int iter = 0; iter < 20; ++iter) {
    const Instance in = random_instance(rng, cfg, 3, 2);
    const CharSet cs = characteristic_set(cfg, in.gens, Ranking::orderly(in.n));
    std::set<std::size_t> led;
    for (const auto& u : cs.set.leaders()) led.insert(u.component);
    EXPECT_EQ(diff_dimension(cs), static_cast<long>(in.n - led.size()));
    const auto phi = dimension_polynomial(cs);
    const int m = cfg.num_derivations();
    EXPECT_EQ(phi.binomial_coeff(static_cast<std::size_t>(m)), diff_dimension(cs));
  }
}

TEST_P(DimensionProperties, DiffDimensionIndependentOfComponentOrder) {
  const DiffFieldConfig cfg = GetParam();
  testing::Rng rng(81 + static_cast<unsigned>(cfg.num_derivations()));
  for (int iter = 0; iter < 15; ++iter) {
    const Instance in = random_instance(rng, cfg, 3, 2);
    std::vector<std::size_t> order(in.n);
    for (std::size_t i = 0; i < in.n; ++i) order[i] = in.n - 1 - i;
    const CharSet a = characteristic_set(cfg, in.gens, Ranking::orderly(in.n));
    const CharSet b = characteristic_set(cfg, in.gens, Ranking(RankingKind::orderly, order));
    EXPECT_EQ(diff_dimension(a), diff_dimension(b));
    EXPECT_EQ(dimension_polynomial(a)(8), dimension_polynomial(b)(8));
  }
}

INSTANTIATE_TEST_SUITE_P(Configs, DimensionProperties,
                         ::testing::Values(DiffFieldConfig(1, 1), DiffFieldConfig(2, 2)));

TEST(DimensionSplit, OrdinaryPolynomialSplitsIntoFreeAndBelowLeaderParts) {
  testing::Rng rng(91);
  for (int iter = 0; iter < 30; ++iter) {
    const Instance in = random_instance(rng, kQt, 3, 3);
    const DimensionReport r = dimension_report(charset(in.n, in.gens));
    ASSERT_TRUE(r.below_leader_count && r.free_term);
    for (std::int64_t k = r.dimpoly.valid_from(); k <= r.dimpoly.valid_from() + 4; ++k) {
      EXPECT_EQ(r.dimpoly(k), r.diff_dimension * (k + 1) + *r.below_leader_count);
    }
    EXPECT_EQ(*r.free_term, r.diff_dimension + *r.below_leader_count);
    EXPECT_EQ(r.free_components.size(), r.diff_dimension.get_ui());
  }
}

}  // namespace
}  // namespace lindiff
