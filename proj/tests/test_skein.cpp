#include "support.hpp"
#include "ybh/skein.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ybh;
using ybh::testing::P;

TEST(Skein, Constants) {
  const auto& s = skein_maps();
  EXPECT_EQ(s.R, (RingMatrix{{1, 0, 0, 0}, {0, P("1 - y^2"), 1, 0}, {0, P("y^2"), 0, 0}, {0, 0, 0, 1}}));
  EXPECT_TRUE(s.alpha.at(0, 0).is_zero());
  EXPECT_TRUE(s.alpha.at(0, 3).is_zero());
  EXPECT_EQ(s.alpha.at(0, 1), -LaurentPoly::y());
  EXPECT_EQ(s.alpha.at(0, 2), LaurentPoly::y(-1));
  EXPECT_EQ(s.xi, (RingMatrix{{P("y^2"), 0}, {0, 1}}));
  EXPECT_EQ(s.zeta, (RingMatrix{{1, 0}, {0, P("y^2")}}));
  EXPECT_EQ(s.lambda_l, (RingMatrix{{-LaurentPoly::y()}, {LaurentPoly::y()}}));
}

TEST(Skein, SkeinIdentity) {
  EXPECT_TRUE(check_skein());
  RingMatrix bad = skein_maps().R;
  bad.set(1, 1, 1);
  EXPECT_FALSE(check_skein(bad));
  // Column e1 (x) e2 of J.
  const auto col = skein_maps().J.column(1);
  EXPECT_EQ(col, (std::vector<LaurentPoly>{0, P("-y^2"), P("y^2"), 0}));
}

TEST(Skein, YangBaxter) {
  EXPECT_TRUE(check_ybe(skein_maps().R));
  EXPECT_TRUE(check_ybe(RingMatrix::identity(4)));
  EXPECT_TRUE(check_ybe(swap_matrix()));
  EXPECT_THROW(check_ybe(RingMatrix::identity(2)), DimensionError);
}

TEST(Skein, ColumnUnital) {
  EXPECT_TRUE(check_column_unital(skein_maps().R));
  EXPECT_FALSE(check_column_unital(skein_maps().J));
  EXPECT_TRUE(check_column_unital(RingMatrix::identity(4)));
}

TEST(Skein, WallCondition) {
  EXPECT_TRUE(check_wall_condition(skein_maps().R));
  EXPECT_FALSE(check_wall_condition(skein_maps().J));
  EXPECT_TRUE(check_wall_condition(RingMatrix::identity(4)));
}

TEST(Skein, WallConditionMatchesColumnUnital) {
  std::mt19937_64 rng(ybh::testing::seed());
  std::bernoulli_distribution fix(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    RingMatrix m = ybh::testing::random_matrix(rng, 4, 4, 2);
    if (fix(rng)) {
      // Force unit column sums through the last row.
      for (std::size_t c = 0; c < 4; ++c) {
        LaurentPoly sum;
        for (std::size_t r = 0; r < 3; ++r) sum += m.at(r, c);
        m.set(3, c, LaurentPoly(1) - sum);
      }
    }
    ASSERT_EQ(check_wall_condition(m), check_column_unital(m));
  }
}

TEST(Skein, LoopIdentities) {
  EXPECT_TRUE(check_loop_identities());
  const auto& s = skein_maps();
  const RingMatrix i2 = RingMatrix::identity(2);
  const RingMatrix cup_lambda = s.alpha * kron(s.lambda_l, i2);
  EXPECT_EQ(cup_lambda, (RingMatrix{{1, P("y^2")}}));
  EXPECT_EQ((s.xi * s.zeta).column(0), (std::vector<LaurentPoly>{P("y^2"), 0}));
  EXPECT_TRUE((s.lambda_l + s.lambda_r).is_zero());
}

TEST(Skein, TemperleyLiebGenerators) {
  EXPECT_EQ(stl_generator(1, 2), skein_maps().J);
  EXPECT_THROW(stl_generator(0, 3), std::out_of_range);
  EXPECT_THROW(stl_generator(3, 3), std::out_of_range);

  const RingMatrix h1 = stl_generator(1, 3), h2 = stl_generator(2, 3);
  const LaurentPoly y2 = LaurentPoly::y(2);
  // The braid-like relation returns the outer generator.
  EXPECT_EQ(h1 * h2 * h1, y2 * h1);
  EXPECT_EQ(h2 * h1 * h2, y2 * h2);
  EXPECT_NE(h1 * h2 * h1, y2 * h2);

  EXPECT_EQ(stl_generator(1, 4) * stl_generator(3, 4), stl_generator(3, 4) * stl_generator(1, 4));
}

TEST(Skein, TemperleyLiebRelations) {
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_TRUE(check_stl_relations(n)) << "n = " << n;
  EXPECT_THROW(check_stl_relations(1), std::out_of_range);
}
