#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "springer_rca/core_model.hpp"
#include "springer_rca/errors.hpp"
#include "springer_rca/semigroup_oracle.hpp"

using namespace springer_rca;

TEST(NumericalSemigroup, Membership) {
  const NumericalSemigroup g(3, 5);
  EXPECT_EQ(g.frobenius(), 7);
  for (long s : {0, 3, 5, 6, 8, 9, 10, 100}) EXPECT_TRUE(g.contains(s));
  for (long s : {-1, 1, 2, 4, 7}) EXPECT_FALSE(g.contains(s));
  EXPECT_THROW(NumericalSemigroup(2, 4), UnsupportedError);
  EXPECT_THROW(NumericalSemigroup(0, 3), ArgumentError);
}

TEST(Ideals, SpecExamples) {
  EXPECT_EQ(count_ideals(2, 3, 0), 1u);
  EXPECT_EQ(count_ideals(2, 3, 1), 1u);
  EXPECT_EQ(count_ideals(2, 3, 2), 2u);
  const NumericalSemigroup g(2, 3);
  const auto ideals = enumerate_ideals(g, 2);
  ASSERT_EQ(ideals.size(), 2u);
  std::vector<std::vector<int>> gaps;
  for (const auto& i : ideals) gaps.push_back(i.gaps());
  std::sort(gaps.begin(), gaps.end());
  EXPECT_EQ(gaps, (std::vector<std::vector<int>>{{0, 2}, {0, 3}}));
}

TEST(Ideals, FrozenCounts) {
  const std::vector<std::tuple<int, int, std::vector<std::size_t>>> table = {
      {2, 3, {1, 1, 2, 2, 2, 2, 2, 2, 2}},
      {3, 4, {1, 1, 2, 3, 4, 4, 5, 5, 5}},
      {4, 5, {1, 1, 2, 3, 5, 6, 8, 9, 11}},
      {3, 5, {1, 1, 2, 3, 4, 5, 6, 6, 7}},
  };
  for (const auto& [n, k, counts] : table) {
    for (std::size_t d = 0; d < counts.size(); ++d) {
      EXPECT_EQ(count_ideals(n, k, static_cast<int>(d)), counts[d]) << n << "," << k << " d=" << d;
    }
  }
}

TEST(Ideals, MatchSubsetOracle) {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
    for (int m = 0; m <= 5; ++m) EXPECT_EQ(count_ideals(n, k, m), oracle::ideal_count(n, k, m));
  }
}

TEST(Ideals, EveryEnumeratedIdealIsStableAndDistinct) {
  const NumericalSemigroup g(3, 5);
  for (int m = 0; m <= 7; ++m) {
    const auto ideals = enumerate_ideals(g, m);
    EXPECT_EQ(ideals.size(), count_ideals(3, 5, m));
    std::set<std::vector<int>> seen;
    for (const auto& i : ideals) {
      EXPECT_TRUE(i.is_stable());
      EXPECT_EQ(i.colength(), static_cast<std::size_t>(m));
      for (int gap : i.gaps()) {
        EXPECT_TRUE(g.contains(gap));
        EXPECT_FALSE(i.contains(gap));
        EXPECT_FALSE(i.contains(gap - 3));
        EXPECT_FALSE(i.contains(gap - 5));
      }
      EXPECT_TRUE(seen.insert(i.gaps()).second);
    }
  }
}

TEST(Ideals, BudgetIsEnforced) {
  EXPECT_THROW(count_ideals(4, 5, 20, OracleBudget{10, 50'000'000}), BudgetError);
  EXPECT_THROW(count_ideals(4, 5, 12, OracleBudget{64, 10}), BudgetError);
}

TEST(OracleComparison, SpecExamples) {
  const auto r = compare_with_fixed_points(Params(2, 3), 8);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details["ideal_counts"], (nlohmann::ordered_json{1, 1, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_TRUE(compare_with_fixed_points(Params(3, 4), 6).passed());
  EXPECT_TRUE(compare_with_fixed_points(Params(2, 3), 0).passed());
}

TEST(OracleComparison, MatchesEnumerationAcrossPairs) {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 5}, {2, 7}, {3, 5}, {4, 5}, {5, 6}, {3, 8}}) {
    EXPECT_TRUE(compare_with_fixed_points(Params(n, k), 10).passed()) << n << "," << k;
  }
}
