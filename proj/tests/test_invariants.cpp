#include <gtest/gtest.h>

#include "hcensus/errors.hpp"
#include "hcensus/invariants.hpp"

using namespace hcensus;

TEST(Invariants, Rho) {
  EXPECT_EQ(rho(Triple(10, 7, 3)), 7);
  EXPECT_EQ(rho(Triple(10, 12, 3)), -8);
  // r = 1: rho(k, g, 1) = 2k - g - 2
  for (int k = 2; k < 10; ++k)
    for (int g = 0; g < 20; ++g) EXPECT_EQ(rho(Triple(k, g, 1)), 2 * k - g - 2);
}

TEST(Invariants, LambdaAndChiMin) {
  EXPECT_EQ(lambda(Triple(10, 12, 3)), 25);
  EXPECT_EQ(lambda(Triple(3, 0, 3)), -3);
  EXPECT_EQ(lambda(Triple(12, 12, 4)), lambda(Triple(10, 12, 3)));
  EXPECT_EQ(chi_min(Triple(8, 9, 3)), 32);
  EXPECT_EQ(chi_min(Triple(10, 11, 3)), 40);
  EXPECT_EQ(chi_min(Triple(10, 12, 3)), 40);
}

TEST(Invariants, Castelnuovo) {
  EXPECT_EQ(castelnuovo_pi(10, 3), 16);
  EXPECT_EQ(castelnuovo_pi(11, 3), 20);
  EXPECT_EQ(castelnuovo_pi(9, 3), 12);
  EXPECT_EQ(castelnuovo_pi(15, 6), 13);
  EXPECT_EQ(castelnuovo_pi1_r3(10), 12);
  EXPECT_EQ(castelnuovo_pi1_r3(11), 15);
  EXPECT_EQ(castelnuovo_pi1_r3(9), 10);
  // the extremal genus for alpha = 4 is r + 7
  for (int r = 5; r <= 30; ++r) EXPECT_EQ(castelnuovo_pi(2 * r + 3, r), r + 7) << r;
}

TEST(Invariants, Preconditions) {
  EXPECT_THROW(Triple(0, 1, 3), Error);
  EXPECT_THROW(Triple(5, -1, 3), Error);
  EXPECT_THROW(castelnuovo_pi(2, 3), Error);
  EXPECT_THROW(castelnuovo_pi(10, 2), Error);
  EXPECT_THROW(castelnuovo_pi1_r3(6), Error);
  EXPECT_FALSE(try_castelnuovo_pi(2, 3).has_value());
  EXPECT_EQ(Triple(10, 12, 3).alpha(), 5);
}

TEST(InvariantsProperty, AlphaZeroRhoIsG) {
  for (int r = 3; r <= 15; ++r)
    for (int g = 0; g <= 50; ++g) EXPECT_EQ(rho(Triple(g + r, g, r)), g);
}

TEST(InvariantsProperty, ChiMinMinusLambda) {
  for (int r = 1; r <= 20; ++r)
    for (int g = 0; g <= 40; ++g)
      for (int d = 1; d <= 60; d += 3) {
        const Triple t(d, g, r);
        EXPECT_EQ(chi_min(t) - lambda(t), (r + 1) * (r + 1) - 1);
      }
}

TEST(InvariantsProperty, CastelnuovoMonotone) {
  for (int r = 3; r <= 12; ++r)
    for (int d = r; d < 100; ++d) EXPECT_LE(castelnuovo_pi(d, r), castelnuovo_pi(d + 1, r)) << d << " " << r;
}

TEST(InvariantsProperty, SecondBound) {
  for (int d = 7; d <= 100; ++d) {
    EXPECT_LE(castelnuovo_pi1_r3(d), castelnuovo_pi(d, 3)) << d;
    EXPECT_GE(castelnuovo_pi1_r3(d), (d - 1) * (d - 2) / 6) << d;
  }
}
