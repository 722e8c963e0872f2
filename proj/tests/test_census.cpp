#include <gtest/gtest.h>

#include <future>
#include <stdexcept>

#include "census_expect.hpp"
#include "hcensus/census.hpp"
#include "hcensus/errors.hpp"

using namespace hcensus;

namespace {
std::string s(Tri t) { return tri_name(t); }
}  // namespace

TEST(Census, SmallExamples) {
  auto v = verdict(Triple(8, 9, 3));
  EXPECT_EQ(v.exists, Tri::Yes);
  EXPECT_EQ(v.irreducible, Tri::Yes);
  ASSERT_EQ(v.components.size(), 1u);
  EXPECT_EQ(v.components[0].dim, 33);

  v = verdict(Triple(9, 10, 3));
  EXPECT_EQ(v.irreducible, Tri::No);
  ASSERT_EQ(v.components.size(), 2u);
  EXPECT_EQ(v.components[0].dim, 36);
  EXPECT_EQ(v.components[1].dim, 36);

  v = verdict(Triple(10, 12, 3));
  EXPECT_EQ(v.alpha, 5);
  EXPECT_EQ(v.irreducible, Tri::No);
  ASSERT_EQ(v.components.size(), 2u);
  for (const auto& c : v.components) EXPECT_EQ(c.dim, 40);

  v = verdict(Triple(10, 11, 3));
  EXPECT_EQ(v.irreducible, Tri::Yes);
  ASSERT_EQ(v.components.size(), 1u);
  EXPECT_EQ(v.components[0].dim, 40);
  EXPECT_FALSE(v.notes.empty());  // the (5,5) family is noted, not listed

  v = verdict(Triple(11, 12, 3));
  ASSERT_EQ(v.components.size(), 1u);
  EXPECT_EQ(v.components[0].dim, 44);
}

TEST(Census, ComponentDims) {
  const auto a = component_dims(Triple(8, 9, 3));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].second, 33);
  const auto b = component_dims(Triple(9, 10, 3));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].second, 36);
  EXPECT_EQ(b[1].second, 36);
  const auto c = component_dims(Triple(10, 12, 3));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].second, 40);
  EXPECT_EQ(c[1].second, 40);
}

TEST(Census, OtherAlphas) {
  EXPECT_EQ(verdict(Triple(8, 5, 3)).irreducible, Tri::Yes);
  EXPECT_EQ(verdict(Triple(8, 6, 3)).alpha, 1);
  EXPECT_EQ(verdict(Triple(18, 15, 7)).irreducible, Tri::No);
  EXPECT_EQ(verdict(Triple(17, 15, 6)).exists, Tri::Yes);
  EXPECT_EQ(verdict(Triple(16, 15, 6)).exists, Tri::Yes);
  EXPECT_EQ(verdict(Triple(14, 13, 6)).exists, Tri::No);
  EXPECT_EQ(verdict(Triple(23, 20, 8)).exists, Tri::Unknown);
}

TEST(Census, Unknown) {
  const auto v = verdict(Triple(15, 14, 5));
  EXPECT_EQ(v.exists, Tri::Yes);
  EXPECT_EQ(v.irreducible, Tri::Unknown);
}

TEST(Census, Alpha4MatchesExpectation) {
  for (int r = 3; r <= 20; ++r)
    for (int g = std::max(0, 5 - r); g <= r + 40; ++g) {
      const Triple t(g + r - 4, g, r);
      const auto v = verdict(t);
      const auto want = census_expect::alpha4(r, g);
      EXPECT_EQ(s(v.exists), want.exists) << "r=" << r << " g=" << g;
      EXPECT_EQ(s(v.irreducible), want.irreducible) << "r=" << r << " g=" << g;
      EXPECT_FALSE(v.citations.empty());
      if (r >= 5) EXPECT_EQ(alpha4_exists_pipeline(t), alpha4_exists_table(t)) << "r=" << r << " g=" << g;
    }
}

TEST(CensusProperty, CastelnuovoConsistency) {
  for (int r = 3; r <= 20; ++r)
    for (int g = 0; g <= 60; ++g)
      for (int a = 0; a <= 5; ++a) {
        const int d = g + r - a;
        if (d < 1) continue;
        std::optional<Verdict> vv;
        ASSERT_NO_THROW(vv = verdict(Triple(d, g, r))) << d << " " << g << " " << r;
        const auto& v = *vv;
        if (d < r || g > castelnuovo_pi(d, r)) {
          EXPECT_EQ(v.exists, Tri::No);
          EXPECT_TRUE(v.components.empty());
        }
        if (v.exists == Tri::No) EXPECT_EQ(v.irreducible, Tri::No);
        if (v.exists == Tri::Yes) EXPECT_LE(g, castelnuovo_pi(d, r));
        EXPECT_FALSE(v.citations.empty());
      }
}

TEST(Census, Tables) {
  const auto t8 = table(TableFamily::RPlus8);
  const auto t9 = table(TableFamily::RPlus9);
  const auto tg = table(TableFamily::GG4);
  EXPECT_EQ(t8.rows.size(), 7u);
  EXPECT_EQ(t9.rows.size(), 10u);
  EXPECT_EQ(tg.rows.size(), 9u);
  EXPECT_TRUE(t8.rows.back().entries.empty());
  EXPECT_EQ(t8.rows.back().exists, Tri::No);
  // (15,15,7): two families, reducible
  EXPECT_EQ(t8.rows[4].entries.size(), 2u);
  EXPECT_EQ(t8.rows[4].irreducible, Tri::No);
  for (const auto* tb : {&t8, &t9, &tg})
    for (const auto& row : tb->rows) EXPECT_FALSE(row.citations.empty()) << row.label;
  EXPECT_EQ(parse_table_family("gg4"), TableFamily::GG4);
  EXPECT_FALSE(parse_table_family("r+10").has_value());
}

TEST(Census, RenderingIsStable) {
  const auto render = [] {
    std::string out;
    for (auto f : {TableFamily::RPlus8, TableFamily::RPlus9, TableFamily::GG4}) {
      const auto t = table(f);
      out += table_json(t) + table_markdown(t) + table_text(t);
    }
    out += verdict_json(verdict(Triple(18, 15, 7)));
    return out;
  };
  const auto ref = render();
  EXPECT_EQ(render(), ref);
  std::vector<std::future<std::string>> jobs;
  for (int i = 0; i < 4; ++i) jobs.push_back(std::async(std::launch::async, render));
  for (auto& j : jobs) EXPECT_EQ(j.get(), ref);
  EXPECT_NE(ref.find("\"schema\": \"census/1\""), std::string::npos);
}

TEST(Census, Preconditions) {
  EXPECT_THROW(verdict(Triple(5, 0, 2)), Error);
  EXPECT_THROW(alpha4_exists_table(Triple(10, 10, 3)), Error);
  EXPECT_THROW(alpha4_exists_pipeline(Triple(11, 11, 4)), Error);
}
