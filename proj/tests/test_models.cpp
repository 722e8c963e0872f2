#include <gtest/gtest.h>

#include "hcensus/errors.hpp"
#include "hcensus/invariants.hpp"
#include "hcensus/models.hpp"

using namespace hcensus;

namespace {

struct Key {
  std::int64_t c, d, delta, bp;
  friend bool operator==(const Key&, const Key&) = default;
};

std::vector<Key> keys(std::int64_t e, std::int64_t g) {
  std::vector<Key> out;
  for (const auto& m : enumerate_quadric_models(e, g)) out.push_back({m.cls.a, m.cls.b, m.delta, m.base_points});
  return out;
}

ModelRecord nodal(std::int64_t c, std::int64_t d, std::int64_t delta, std::int64_t bp = 0) {
  ModelRecord m;
  m.cls = {c, d};
  m.delta = delta;
  m.base_points = bp;
  m.e = c + d + bp;
  m.g = pa(m.cls) - delta;
  m.surface = delta == 0 ? ModelSurface::Quadric : ModelSurface::BlowupOfQuadric;
  return m;
}

BlowupClass B(const char* s) { return parse_blowup(s); }

}  // namespace

TEST(Models, CaseLists) {
  EXPECT_EQ(keys(10, 13), (std::vector<Key>{{4, 6, 2, 0}, {5, 5, 3, 0}}));
  EXPECT_EQ(keys(10, 14), (std::vector<Key>{{4, 6, 1, 0}, {5, 5, 2, 0}}));
  EXPECT_EQ(keys(10, 15), (std::vector<Key>{{4, 6, 0, 0}, {5, 5, 1, 0}}));
  EXPECT_EQ(keys(10, 16), (std::vector<Key>{{5, 5, 0, 0}}));
  EXPECT_EQ(keys(10, 12), (std::vector<Key>{{3, 7, 0, 0}, {4, 6, 3, 0}, {5, 5, 4, 0}, {4, 5, 0, 1}}));
  EXPECT_TRUE(keys(10, 17).empty());
  EXPECT_THROW(enumerate_quadric_models(3, 0), Error);
}

TEST(Models, CompoundedTag) {
  bool seen = false;
  for (const auto& m : enumerate_quadric_models(10, 4)) {
    EXPECT_EQ(m.compounded_or_degenerate(), m.cls.a <= 2);
    seen = seen || m.compounded_or_degenerate();
  }
  EXPECT_TRUE(seen);
}

TEST(Models, ProperTransformAndResidual) {
  for (int t = 1; t <= 6; ++t) {
    const auto curve = proper_transform(nodal(5, 5, t));
    std::vector<std::int64_t> b{3, 3};
    b.resize(t + 1, 2);
    EXPECT_EQ(curve, BlowupClass(8, b));
    EXPECT_EQ(residual_class_blowup(curve), BlowupClass(3, std::vector<std::int64_t>(t + 1, 1)));
  }
  for (int s = 1; s <= 6; ++s) {
    const auto curve = proper_transform(nodal(4, 6, s));
    std::vector<std::int64_t> b{4, 2};
    b.resize(s + 1, 2);
    EXPECT_EQ(curve, BlowupClass(8, b));
    std::vector<std::int64_t> rb{2, 0};
    rb.resize(s + 1, 1);
    EXPECT_EQ(residual_class_blowup(curve), BlowupClass(3, rb));
  }
  EXPECT_EQ(residual_class_blowup(B("(8;3,3,2,2)")), B("(3;1^4)"));
  EXPECT_EQ(residual_class_blowup(B("(8;4,2,2,2)")), B("(3;2,0,1,1)"));
  EXPECT_THROW(proper_transform(nodal(5, 5, 0)), Error);
}

TEST(Models, QuadricResidual) {
  EXPECT_EQ(residual_class_quadric({4, 6}), (QuadricClass{1, 3}));
  EXPECT_EQ(residual_class_quadric({3, 7}), (QuadricClass{0, 4}));
  EXPECT_EQ(residual_class_quadric({4, 5}), (QuadricClass{1, 2}));
  EXPECT_TRUE(quadric_residual_very_ample({1, 3}));
  EXPECT_FALSE(quadric_residual_very_ample({0, 4}));
  EXPECT_TRUE(quadric_residual_very_ample({1, 1}));
}

TEST(Models, Dimensions) {
  EXPECT_EQ(severi_dim({5, 5}, 1), 34);
  EXPECT_EQ(glevel_dim({5, 5}, 1), 28);
  EXPECT_EQ(severi_dim({4, 6}, 0), 34);
  EXPECT_EQ(glevel_dim({4, 6}, 0), 28);
  EXPECT_EQ(glevel_dim({5, 6}, 3), 32);
  EXPECT_EQ(glevel_dim({4, 4}, 0), 18);
  EXPECT_EQ(severi_dim({3, 8}, 0), 35);
  EXPECT_THROW(severi_dim({2, 2}, 2), Error);
}

TEST(Models, SecantObstruction) {
  EXPECT_EQ(secant_obstruction_base_point({4, 5}), 4);
  EXPECT_EQ(secant_obstruction_base_point({2, 5}), 2);
  EXPECT_EQ(secant_obstruction_base_point({4, 6}), 4);
  EXPECT_FALSE(secant_obstruction_base_point({0, 3}).has_value());
}

TEST(Models, BasePointResolution) {
  // smooth (5,5) plus a base point: curve on S_2, residual (3;1,1)
  auto a = analyse_residual(nodal(5, 5, 0, 1));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->curve, B("(9;4,4)"));
  EXPECT_EQ(a->residual, B("(3;1,1)"));
  EXPECT_TRUE(a->certified());
  // smooth (4,5) plus a base point: residual contracts e2
  a = analyse_residual(nodal(4, 5, 0, 1));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->curve, B("(8;4,3)"));
  EXPECT_EQ(a->residual, B("(2;1,0)"));
  EXPECT_FALSE(a->very_ample);
  EXPECT_EQ(a->witness, B("(0;0,-1)"));
  // nodal (5,5) with a base point
  a = analyse_residual(nodal(5, 5, 4, 1));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->curve, B("(8;3,3,2,2,2,1)"));
  EXPECT_EQ(a->residual, B("(3;1^6)"));
  // (5,6) nodal: (9;4,3,2^{delta-1}) with residual (4;2,1^delta)
  a = analyse_residual(nodal(5, 6, 7));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->curve, B("(9;4,3,2^6)"));
  EXPECT_EQ(a->residual, B("(4;2,1^7)"));
  EXPECT_TRUE(a->very_ample);
  EXPECT_TRUE(a->criterion_only);
  EXPECT_FALSE(a->certified());
  EXPECT_FALSE(analyse_residual(nodal(5, 6, 8)).has_value());
}

TEST(ModelsProperty, Rederivation) {
  for (std::int64_t e = 4; e <= 16; ++e)
    for (std::int64_t g = 0; g <= 40; ++g)
      for (const auto& m : enumerate_quadric_models(e, g)) {
        EXPECT_EQ(pa(m.cls) - m.delta, g);
        EXPECT_EQ(m.cls.a + m.cls.b + m.base_points, e);
        EXPECT_LE(m.cls.a, m.cls.b);
        EXPECT_GE(m.delta, 0);
      }
}

TEST(ModelsProperty, TransformPreservesGenus) {
  for (std::int64_t e = 4; e <= 16; ++e)
    for (std::int64_t g = 0; g <= 40; ++g)
      for (const auto& m : enumerate_quadric_models(e, g, 0)) {
        if (m.delta < 1 || m.delta > 4 || m.cls.b > 8) continue;
        EXPECT_EQ(pa(proper_transform(m)), g);
      }
}

TEST(ModelsProperty, ResidualDegreeLaw) {
  int checked = 0;
  for (std::int64_t e = 4; e <= 18; ++e)
    for (std::int64_t g = 0; g <= 49; ++g)
      for (const auto& m : enumerate_quadric_models(e, g)) {
        if (m.cls.a < 1) continue;
        const auto a = analyse_residual(m);
        if (!a) continue;
        EXPECT_EQ(a->residual_degree, 2 * g - 2 - e) << to_string(m.cls) << " delta " << m.delta;
        if (a->on_blowup) EXPECT_EQ(pa(*a->curve), g);
        if (m.delta >= 1 && m.base_points == 0) {
          EXPECT_EQ(*a->curve, proper_transform(m));
          EXPECT_EQ(*a->residual, residual_class_blowup(*a->curve));
        }
        ++checked;
      }
  EXPECT_GT(checked, 500);
}

TEST(ModelsProperty, NodalFamilies) {
  for (int t = 1; t <= 4; ++t) {
    const auto curve = proper_transform(nodal(5, 5, t));
    EXPECT_TRUE(is_very_ample(residual_class_blowup(curve))) << t;
  }
  for (int s = 1; s <= 3; ++s) {
    const auto curve = proper_transform(nodal(4, 6, s));
    EXPECT_EQ(contracted_multisecant(residual_class_blowup(curve), curve),
              BlowupClass::exceptional(2, static_cast<std::size_t>(s + 1)))
        << s;
  }
}

TEST(ModelsProperty, CastelnuovoConsistency) {
  for (std::int64_t e = 4; e <= 30; ++e)
    for (std::int64_t g = castelnuovo_pi(e, 3) + 1; g <= castelnuovo_pi(e, 3) + 20; ++g)
      EXPECT_TRUE(enumerate_quadric_models(e, g).empty()) << e << " " << g;
}
