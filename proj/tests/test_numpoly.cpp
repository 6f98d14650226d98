#include <gtest/gtest.h>

#include <algorithm>

#include "lindiff/errors.hpp"
#include "lindiff/numpoly.hpp"
#include "support/random_instances.hpp"

namespace lindiff {
namespace {

Antichain single(std::size_t m, std::vector<ExponentVector> vectors) {
  return Antichain{m, {std::move(vectors)}};
}

TEST(CountCofilter, SquareCornerInTwoDerivations) {
  const Antichain e = single(2, {{1, 1}});
  const NumericalPolynomial p = count_cofilter(e);
  EXPECT_EQ(p.to_string(), "2*t + 1");
  EXPECT_EQ(p(3), 7);
  EXPECT_EQ(brute_count(e, 3), 7);
  EXPECT_EQ(p.valid_from(), 2);
}

TEST(CountCofilter, EmptyAndFullExclusion) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const NumericalPolynomial full = count_cofilter(single(m, {}));
    for (std::int64_t t = 0; t < 6; ++t) EXPECT_EQ(full(t), binomial_poly(t, static_cast<int>(m)));
    EXPECT_EQ(full.degree(), static_cast<int>(m));
    EXPECT_TRUE(count_cofilter(single(m, {ExponentVector(m, 0)})).is_zero());
  }
}

TEST(CountCofilter, RejectsComparableVectors) {
  EXPECT_THROW(count_cofilter(single(2, {{1, 1}, {1, 2}})), NotAntichain);
  EXPECT_THROW(count_cofilter(single(2, {{1, 1}, {1, 1}})), NotAntichain);
  EXPECT_THROW(count_cofilter(single(2, {{1}})), NotAntichain);
}

TEST(BruteCount, Examples) {
  EXPECT_EQ(brute_count(single(1, {}), 4), 5);
  EXPECT_EQ(brute_count(single(1, {{2}}), 5), 2);
}

TEST(NumericalPolynomial, Evaluation) {
  const NumericalPolynomial p({1, 1}, 0);
  EXPECT_EQ(p(3), 5);
  EXPECT_EQ(p.to_string(), "t + 2");
  EXPECT_EQ(NumericalPolynomial({}, 0)(7), 0);
  const NumericalPolynomial q({0, 0, 2}, 0);
  EXPECT_EQ(q(2), 12);
  EXPECT_EQ(q.to_string(), "t^2 + 3*t + 2");
  EXPECT_EQ(NumericalPolynomial({1, 0, 0}, 0).degree(), 0);
}

TEST(NumericalPolynomial, MonomialBasisConversion) {
  const NumericalPolynomial p({1, 1, 1}, 0);
  // 1 + (t+1) + (t+2)(t+1)/2
  const std::vector<Rational> expected{Rational(3), Rational(5, 2), Rational(1, 2)};
  EXPECT_EQ(p.monomial_coeffs(), expected);
  EXPECT_EQ(p.to_string(), "1/2*t^2 + 5/2*t + 3");
}

TEST(TypeAndHeights, Examples) {
  const TypeAndHeights linear = type_and_heights(NumericalPolynomial({1, 1}, 0), 1);
  EXPECT_EQ(linear.type, 1);
  EXPECT_EQ(linear.typical_height, 1);
  EXPECT_EQ(linear.diff_height, 1);

  const TypeAndHeights constant = type_and_heights(NumericalPolynomial({2}, 0), 1);
  EXPECT_EQ(constant.type, 0);
  EXPECT_EQ(constant.typical_height, 2);
  EXPECT_EQ(constant.diff_height, 0);

  const TypeAndHeights free2 = type_and_heights(NumericalPolynomial({0, 0, 2}, 0), 2);
  EXPECT_EQ(free2.type, 2);
  EXPECT_EQ(free2.typical_height, 2);
  EXPECT_EQ(free2.diff_height, 2);

  const TypeAndHeights zero = type_and_heights(NumericalPolynomial({}, 0), 2);
  EXPECT_FALSE(zero.type.has_value());
  EXPECT_EQ(zero.typical_height, 0);
  EXPECT_EQ(zero.diff_height, 0);
}

class NumpolyProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(NumpolyProperties, MatchesEnumerationOnValidityRange) {
  const std::size_t m = GetParam();
  testing::Rng rng(1000 + m);
  for (int iter = 0; iter < 80; ++iter) {
    const Antichain e = testing::random_antichain(rng, m, 1 + iter % 2, 4, 4);
    const NumericalPolynomial p = count_cofilter(e);
    EXPECT_LE(p.degree(), static_cast<int>(m));
    for (std::int64_t t = p.valid_from(); t <= p.valid_from() + 6; ++t) {
      EXPECT_EQ(p(t), brute_count(e, static_cast<std::uint32_t>(t)));
    }
    const auto invariants = type_and_heights(p, static_cast<int>(m));
    if (invariants.type) EXPECT_LE(*invariants.type, static_cast<int>(m));
  }
}

TEST_P(NumpolyProperties, AddingAVectorNeverIncreasesCount) {
  const std::size_t m = GetParam();
  testing::Rng rng(2000 + m);
  std::uniform_int_distribution<std::uint32_t> entry(0, 4);
  for (int iter = 0; iter < 40; ++iter) {
    const Antichain e = testing::random_antichain(rng, m, 1, 3, 4);
    ExponentVector v(m);
    for (auto& x : v) x = entry(rng);
    // Keep the minimal elements of E plus v.
    Antichain bigger{m, {{}}};
    const auto leq = [](const ExponentVector& a, const ExponentVector& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
      }
      return true;
    };
    const bool covered = std::any_of(e.components[0].begin(), e.components[0].end(),
                                     [&](const ExponentVector& w) { return leq(w, v); });
    if (covered) continue;
    for (const auto& w : e.components[0]) {
      if (!leq(v, w)) bigger.components[0].push_back(w);
    }
    bigger.components[0].push_back(v);
    const NumericalPolynomial before = count_cofilter(e);
    const NumericalPolynomial after = count_cofilter(bigger);
    const std::int64_t from = std::max(before.valid_from(), after.valid_from());
    for (std::int64_t t = from; t <= from + 6; ++t) EXPECT_LE(after(t), before(t));
  }
}

TEST_P(NumpolyProperties, FirstDifferenceIsIntegral) {
  const std::size_t m = GetParam();
  testing::Rng rng(3000 + m);
  for (int iter = 0; iter < 40; ++iter) {
    const NumericalPolynomial p = count_cofilter(testing::random_antichain(rng, m, 2, 3, 4));
    const NumericalPolynomial d = p.difference();
    for (std::int64_t t = d.valid_from(); t <= d.valid_from() + 6; ++t) EXPECT_EQ(d(t), p(t) - p(t - 1));
    // Degree drops by exactly one unless p is constant.
    if (p.degree() >= 1) EXPECT_EQ(d.degree(), p.degree() - 1);
    // Delta C(t+i, i) = C(t+i-1, i-1): the coefficient list shifts down.
    const auto& a = p.binomial_coeffs();
    if (!a.empty()) EXPECT_EQ(d.binomial_coeffs(), std::vector<Integer>(a.begin() + 1, a.end()));
    EXPECT_LE(d.degree(), static_cast<int>(m));
  }
}

INSTANTIATE_TEST_SUITE_P(Derivations, NumpolyProperties, ::testing::Values(1U, 2U, 3U));

}  // namespace
}  // namespace lindiff
