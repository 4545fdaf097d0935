#include "goldens.hpp"
#include "support.hpp"
#include "ybh/differentials.hpp"

#include <gtest/gtest.h>

#include <set>
#include <thread>

using namespace ybh;
using ybh::testing::P;

TEST(Coefficients, Theta) {
  EXPECT_EQ(theta({1, 2}), P("-y^2"));
  EXPECT_TRUE(theta({1, 1}).is_zero());
  EXPECT_EQ(theta({2, 1}), LaurentPoly(1));
  // Each passing e_1 picks up xi(e_1) = y^2, each passing e_2 nothing.
  EXPECT_EQ(theta({1, 2, 1}), P("y^2"));
  EXPECT_EQ(theta({2, 2, 1}), LaurentPoly(1));
  EXPECT_THROW(theta({1}), std::invalid_argument);
  EXPECT_THROW(theta({1, 3}), std::invalid_argument);
}

TEST(Coefficients, Tau) {
  EXPECT_EQ(tau({1, 2}), P("-y^2"));
  EXPECT_TRUE(tau({2, 2}).is_zero());
  // zeta fixes a passing e_1 and scales a passing e_2 by y^2.
  EXPECT_EQ(tau({2, 1, 1}), LaurentPoly(1));
  EXPECT_EQ(tau({2, 1, 2}), P("y^2"));
  EXPECT_EQ(tau({1, 2, 2, 2}), P("-y^6"));
  EXPECT_THROW(tau({2}), std::invalid_argument);
}

TEST(Generators, LowArity) {
  const auto& s = skein_maps();
  EXPECT_EQ(generator(GeneratorKind::g, 2).matrix, s.J);
  EXPECT_EQ(generator(GeneratorKind::h, 2).matrix, s.J);
  EXPECT_EQ(generator(GeneratorKind::g_prime, 1).matrix, s.mu);
  EXPECT_EQ(generator(GeneratorKind::h_prime, 1).matrix, s.mu);
  EXPECT_EQ(generator(GeneratorKind::g, 1).matrix, RingMatrix::identity(2));
  // g'_2 (e1 e2) = -y^2 (e2 - e1)
  const auto col = generator(GeneratorKind::g_prime, 2).matrix.column(TensorIndex{{1, 2}}.flat());
  EXPECT_EQ(col, (std::vector<LaurentPoly>{P("y^2"), P("-y^2")}));
  EXPECT_THROW(generator(GeneratorKind::g, 0), std::invalid_argument);
}

TEST(Generators, MatchDiagramDefinitions) {
  // g_k = (beta (x) xi^{k-2})(1^{k-2} (x) alpha), h_k = (zeta^{k-2} (x) beta)(alpha (x) 1^{k-2}),
  // g'_k = (lambda_l (x) xi^{k-2})(1^{k-2} (x) alpha), h'_k = (zeta^{k-2} (x) lambda_r)(alpha (x) 1^{k-2}).
  const auto& s = skein_maps();
  for (int k = 2; k <= 6; ++k) {
    const auto m = static_cast<std::size_t>(k - 2);
    RingMatrix xi_pow = RingMatrix::identity(1), zeta_pow = RingMatrix::identity(1);
    for (std::size_t i = 0; i < m; ++i) {
      xi_pow = kron(xi_pow, s.xi);
      zeta_pow = kron(zeta_pow, s.zeta);
    }
    const RingMatrix cup_right = kron(RingMatrix::tensor_identity(m), s.alpha);
    const RingMatrix cup_left = kron(s.alpha, RingMatrix::tensor_identity(m));
    EXPECT_EQ(generator(GeneratorKind::g, k).matrix, kron(s.beta, xi_pow) * cup_right) << "k = " << k;
    EXPECT_EQ(generator(GeneratorKind::g_prime, k).matrix, kron(s.lambda_l, xi_pow) * cup_right) << "k = " << k;
    EXPECT_EQ(generator(GeneratorKind::h, k).matrix, kron(zeta_pow, s.beta) * cup_left) << "k = " << k;
    EXPECT_EQ(generator(GeneratorKind::h_prime, k).matrix, kron(zeta_pow, s.lambda_r) * cup_left) << "k = " << k;
  }
}

TEST(Words, Enumeration) {
  auto names = [](int n, Side side) {
    std::set<std::string> out;
    for (const auto& w : enumerate_sn(n, side)) out.insert(w.to_string());
    return out;
  };
  EXPECT_EQ(names(2, Side::left), (std::set<std::string>{"g'2"}));
  EXPECT_EQ(names(3, Side::left), (std::set<std::string>{"g'1 g1^2", "g'1 g2", "g'3"}));
  EXPECT_EQ(names(4, Side::left), (std::set<std::string>{"g'1 g1 g2", "g'1 g3", "g'2 g1^2", "g'2 g2", "g'4"}));
  EXPECT_EQ(names(3, Side::right), (std::set<std::string>{"h1^2 h'1", "h2 h'1", "h'3"}));
  for (int n = 1; n <= 10; ++n) {
    const auto words = enumerate_sn(n, Side::left);
    for (const auto& w : words) {
      ASSERT_TRUE(w.valid()) << w.to_string();
      ASSERT_EQ(w.arity(), n);
    }
    ASSERT_EQ(std::set<std::string>(names(n, Side::left)).size(), words.size());
  }
  EXPECT_THROW(enumerate_sn(0, Side::left), std::invalid_argument);
}

TEST(Words, Realize) {
  GeneratorWord w;
  w.primed_arity = 1;
  w.body = {{2, 1}};
  const RingMatrix m = realize(w);
  EXPECT_EQ(m, kron(skein_maps().mu, skein_maps().J));
  w.side = Side::right;
  EXPECT_EQ(realize(w), kron(skein_maps().J, skein_maps().mu));
}

TEST(Differentials, LowDegrees) {
  EXPECT_TRUE(d_curtain(1).is_zero());
  EXPECT_EQ(d_curtain(1).shape(), "1x2");
  EXPECT_TRUE(d_skein(2).is_zero());
  EXPECT_EQ(d_skein(2).shape(), "2x4");
  EXPECT_TRUE(d_psi(2).is_zero());
}

TEST(Differentials, DegreeThreeGolden) {
  const RingMatrix g = ybh::testing::golden_d3();
  EXPECT_EQ(d_skein(3), g);
  EXPECT_EQ(d_curtain(3), g);
  EXPECT_EQ(d_psi(3), g);
}

TEST(Differentials, DegreeFourGolden) {
  const RingMatrix g = ybh::testing::golden_d4();
  EXPECT_TRUE(mat_equal_upto_column_order(d_curtain(4), g));
  EXPECT_EQ(d_skein(4), g);
  EXPECT_EQ(d_psi(4), g);
  const auto col = d_skein(4).column(TensorIndex{{1, 1, 1, 2}}.flat());
  EXPECT_EQ(col[(TensorIndex{{1, 1, 1}}.flat())], P("y^6 - y^2"));
  EXPECT_EQ(col[(TensorIndex{{1, 2, 1}}.flat())], P("y^2 - y^4"));
  EXPECT_EQ(col[(TensorIndex{{2, 1, 1}}.flat())], P("y^4 - y^6"));
}

TEST(Differentials, ThreeConstructionsAgree) {
  for (int n = 1; n <= 7; ++n) {
    const RingMatrix c = d_curtain(n);
    ASSERT_EQ(d_skein(n), c) << "n = " << n;
    ASSERT_EQ(d_psi(n), c) << "n = " << n;
  }
}

TEST(Differentials, ChainCondition) {
  for (int n = 1; n <= 7; ++n) ASSERT_TRUE((d_curtain(n) * d_curtain(n + 1)).is_zero()) << "n = " << n;
}

TEST(Differentials, CurtainBounds) {
  EXPECT_THROW(curtain_left(0, 3), std::out_of_range);
  EXPECT_THROW(curtain_right(4, 3), std::out_of_range);
  EXPECT_THROW(d_curtain(0), std::invalid_argument);
  EXPECT_EQ(curtain_left(1, 3), kron(skein_maps().mu, RingMatrix::tensor_identity(2)));
  EXPECT_EQ(curtain_right(3, 3), kron(RingMatrix::tensor_identity(2), skein_maps().mu));
}

TEST(Differentials, ConcurrentCallsAgree) {
  std::vector<RingMatrix> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) threads.emplace_back([t, &results] { results[static_cast<std::size_t>(t)] = d_skein(6); });
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, d_curtain(6));
}

TEST(Psi, Base) {
  const auto& s = skein_maps();
  EXPECT_EQ(psi(0, Side::left), s.lambda_l);
  EXPECT_EQ(psi(0, Side::right), s.lambda_r);
  EXPECT_EQ(psi(1, Side::left), kron(s.mu, s.beta) + kron(s.lambda_l, s.xi));
  const RingMatrix i2 = RingMatrix::identity(2);
  const RingMatrix want = kron({s.mu, i2, s.beta}) + kron({s.mu, s.beta, s.xi}) + kron({s.lambda_l, s.alpha, s.beta}) +
                         kron({s.lambda_l, s.xi, s.xi});
  EXPECT_EQ(psi(2, Side::left), want);
  EXPECT_THROW(psi(-1, Side::left), std::invalid_argument);
}

TEST(Psi, WallCurtainDecomposition) {
  for (int n = 1; n <= 7; ++n) {
    ASSERT_EQ(wall_curtain_via_psi(n, Side::left), strand_to_left_wall(n)) << "n = " << n;
    ASSERT_EQ(wall_curtain_via_psi(n, Side::right), strand_to_right_wall(n)) << "n = " << n;
  }
}

TEST(Psi, GammaLambdaDecomposition) {
  for (int n = 1; n <= 6; ++n) ASSERT_EQ(psi_via_gamma_lambda(n), psi(n, Side::left)) << "n = " << n;
}

TEST(GammaLambda, SmallSets) {
  const auto& s = skein_maps();
  const auto one = gamma_lambda_sets(1);
  ASSERT_EQ(one.gamma.size(), 2u);
  EXPECT_EQ(one.gamma[0].label, "beta.xi");
  EXPECT_EQ(one.gamma[0].matrix, kron(s.beta, s.xi));
  EXPECT_EQ(one.gamma[1].label, "1.beta");
  EXPECT_EQ(one.gamma[1].matrix, kron(RingMatrix::identity(2), s.beta));
  ASSERT_EQ(one.lambda.size(), 1u);
  EXPECT_EQ(one.lambda[0].matrix, s.xi);

  const auto two = gamma_lambda_sets(2);
  ASSERT_EQ(two.lambda.size(), 2u);
  EXPECT_EQ(two.lambda[0].matrix, kron(s.xi, s.xi));
  EXPECT_EQ(two.lambda[1].label, "alpha.beta");
  EXPECT_EQ(two.lambda[1].matrix, s.J);
  EXPECT_EQ(two.gamma.size(), 4u);
}

TEST(GammaLambda, ElementsAreDistinct) {
  for (int n = 1; n <= 6; ++n) {
    const auto sets = gamma_lambda_sets(n);
    for (const auto* family : {&sets.gamma, &sets.lambda}) {
      std::set<std::string> texts, labels;
      for (const auto& e : *family) {
        texts.insert(matrix_to_text(e.matrix));
        labels.insert(e.label);
      }
      ASSERT_EQ(texts.size(), family->size()) << "n = " << n;
      ASSERT_EQ(labels.size(), family->size()) << "n = " << n;
    }
  }
}
