#include <gtest/gtest.h>

#include "hcensus/errors.hpp"
#include "hcensus/gonal.hpp"

using namespace hcensus;

TEST(Gonal, Ckm) {
  for (int k = 4; k < 12; ++k)
    for (int r = 3; r < 12; ++r) EXPECT_TRUE(ckm_condition(3 * k + r - 2, k, 2, 3));
  for (int k = 4; k < 12; ++k)
    for (int r = 4; r < 12; ++r) EXPECT_TRUE(ckm_condition(3 * k + r - 1, k, 3, 3));
  for (int k = 2; k < 10; ++k)
    for (int m = 0; m < 5; ++m) EXPECT_FALSE(ckm_condition(2 * m + 3 * (k - 1) - 1, k, m, 3));
  EXPECT_THROW(ckm_condition(10, 1, 0, 0), Error);
}

TEST(Gonal, Recipes) {
  for (int r = 5; r <= 12; ++r) {
    const auto rec = existence_recipe(r + 10, r);
    ASSERT_TRUE(rec) << r;
    EXPECT_EQ(rec->k, 4);
    EXPECT_EQ(rec->extra_points, 0);
    EXPECT_EQ(rec->m, 2);
  }
  EXPECT_FALSE(existence_recipe(16, 4).has_value());
  const auto c = recipe_candidate(16, 4);
  EXPECT_EQ(c.e, 14);
  EXPECT_EQ(c.k, 4);
  EXPECT_EQ(c.extra_points, 2);
  EXPECT_FALSE(c.valid());
  EXPECT_EQ(c.assumptions.size(), 1u);
  const auto r3 = existence_recipe(13, 3);
  ASSERT_TRUE(r3);
  EXPECT_EQ(r3->k, 4);
  EXPECT_EQ(r3->extra_points, 0);
  EXPECT_FALSE(existence_recipe(14, 3).has_value());
  EXPECT_TRUE(existence_recipe(15, 4).has_value());
  EXPECT_FALSE(existence_recipe(r3->g + 2, 3).has_value());
  EXPECT_FALSE(existence_recipe(18, 9).has_value());  // e = 11, k = 3
}

TEST(Gonal, Compounded) {
  using V = std::vector<std::pair<std::int64_t, std::int64_t>>;
  EXPECT_EQ(compounded_cases(10), (V{{2, 5}, {2, 4}, {2, 3}, {3, 3}}));
  EXPECT_EQ(compounded_cases(11), (V{{2, 5}, {2, 4}, {2, 3}, {3, 3}}));
  EXPECT_EQ(compounded_cases(6), (V{{2, 3}}));
  EXPECT_EQ(compounded_interpretation(2, 4), "bielliptic");
  EXPECT_TRUE(compounded_excludes_very_ample(10, 17, 9));
  EXPECT_TRUE(compounded_excludes_very_ample(11, 21, 12));
  EXPECT_FALSE(compounded_excludes_very_ample(10, 16, 8));
  EXPECT_FALSE(compounded_excludes_very_ample(11, 20, 11));
  try {
    compounded_excludes_very_ample(12, 20, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Scope);
  }
  EXPECT_THROW(compounded_excludes_very_ample(10, 17, 8), Error);
}

TEST(GonalProperty, RecipesAboveRPlus10) {
  for (int r = 5; r <= 20; ++r)
    for (int g = r + 10; g <= r + 40; ++g) {
      const auto rec = existence_recipe(g, r);
      ASSERT_TRUE(rec) << g << " " << r;
      EXPECT_EQ(rec->series_degree(), g + r - 4);
      EXPECT_EQ(rec->e, 3 * rec->k + rec->extra_points);
      EXPECT_LT(2 * rec->k - g - 2, 0);
    }
}

TEST(GonalProperty, CompoundedMatchesFactorScan) {
  for (int e = 6; e <= 30; ++e) {
    std::vector<std::pair<std::int64_t, std::int64_t>> brute;
    for (int k = 2; k <= e; ++k)
      for (int f = e; f >= 3; --f)
        if (k * f <= e) brute.emplace_back(k, f);
    EXPECT_EQ(compounded_cases(e), brute) << e;
  }
}

TEST(GonalProperty, MonotoneInG) {
  for (int r = 3; r <= 15; ++r)
    for (int cls = 0; cls < 3; ++cls) {
      bool seen_valid = false;
      for (int g = r + 1; g <= r + 60; ++g) {
        if ((g - r + 2) % 3 != cls) continue;
        const bool valid = existence_recipe(g, r).has_value();
        if (seen_valid) EXPECT_TRUE(valid) << g << " " << r;
        seen_valid = seen_valid || valid;
      }
    }
}
