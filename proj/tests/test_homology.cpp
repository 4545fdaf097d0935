#include "support.hpp"
#include "ybh/homology.hpp"

#include <gtest/gtest.h>

using namespace ybh;
using ybh::testing::P;

namespace {
HomologyGroup group(int n, std::size_t free_rank, std::vector<std::string> torsion) {
  HomologyGroup h;
  h.degree = n;
  h.free_rank = free_rank;
  for (const auto& t : torsion) h.torsion.push_back(P(t));
  return h;
}
} // namespace

TEST(Homology, LowDegrees) {
  EXPECT_EQ(homology(1), group(1, 2, {}));
  EXPECT_EQ(homology(2), group(2, 2, {"y^2 - 1", "y^4 - 1"}));
  EXPECT_EQ(homology(3), group(3, 2, {"y^2 - 1", "y^2 - 1", "y^4 - 1", "y^4 - 1"}));
  EXPECT_THROW(homology(0), std::invalid_argument);
}

TEST(Homology, TorsionIndependentOfPivotOrder) {
  for (int n = 1; n <= 6; ++n)
    ASSERT_EQ(homology(n, PivotStrategy::min_norm_row_major), homology(n, PivotStrategy::min_norm_sparsest)) << "n = " << n;
}

TEST(Homology, RankNullityBookkeeping) {
  // free_rank(H_n) + rank d_n + rank d_{n+1} = 2^n; torsion lives inside im d_{n+1}'s span.
  for (int n = 1; n <= 6; ++n) {
    const HomologyGroup h = homology(n);
    const std::size_t rn = rank(differential(n)), rn1 = rank(differential(n + 1));
    ASSERT_EQ(h.free_rank + rn + rn1, tensor_dim(static_cast<std::size_t>(n))) << "n = " << n;
    ASSERT_LE(h.torsion.size(), rn1) << "n = " << n;
  }
}

TEST(Homology, TorsionIsADivisibilityChain) {
  for (int n = 1; n <= 6; ++n) {
    const HomologyGroup h = homology(n);
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
      ASSERT_TRUE(is_canonical(h.torsion[i]));
      ASSERT_FALSE(h.torsion[i].is_unit());
      if (i > 0) {
        ASSERT_TRUE(divides(h.torsion[i - 1], h.torsion[i]));
      }
    }
  }
}

TEST(Cohomology, LowDegrees) {
  EXPECT_EQ(cohomology(1), group(1, 2, {}));
  EXPECT_EQ(cohomology(2), group(2, 2, {}));
  EXPECT_EQ(cohomology(3), group(3, 2, {"y^2 - 1", "y^4 - 1"}));
}

TEST(Cohomology, DirectMatchesUniversalCoefficients) {
  for (int n = 1; n <= 5; ++n) ASSERT_TRUE(equivalent(cohomology_direct(n), cohomology_uct(n))) << "n = " << n;
}

TEST(Cohomology, AlphaIsANontrivialCocycle) {
  EXPECT_TRUE(check_alpha_cocycle());
  // Column e1 e1 e2 of alpha d_3 expanded by hand.
  const auto col = differential(3).column(TensorIndex{{1, 1, 2}}.flat());
  const auto& a = skein_maps().alpha;
  LaurentPoly sum;
  for (std::size_t r = 0; r < 4; ++r) sum += a.at(0, r) * col[r];
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(a.at(0, TensorIndex{{1, 2}}.flat()), -LaurentPoly::y());
}

TEST(Conjecture, FibonacciPartialSums) {
  EXPECT_EQ(fibonacci_partial_sum(-1), 0u);
  EXPECT_EQ(fibonacci_partial_sum(0), 1u);
  EXPECT_EQ(fibonacci_partial_sum(1), 2u);
  EXPECT_EQ(fibonacci_partial_sum(2), 4u);
  EXPECT_EQ(fibonacci_partial_sum(3), 7u);
  EXPECT_EQ(fibonacci_partial_sum(4), 12u);
  EXPECT_THROW(fibonacci_partial_sum(-2), std::invalid_argument);
}

TEST(Conjecture, Predictions) {
  EXPECT_EQ(predicted_a(1), 0u);
  const auto p2 = conjecture_prediction(2);
  EXPECT_EQ(p2.a_n, 1u);
  EXPECT_EQ(p2.s_n_minus_2, 1u);
  const auto p3 = conjecture_prediction(3);
  EXPECT_EQ(p3.a_n, 2u);
  EXPECT_EQ(p3.s_n_minus_2, 2u);
  const auto p4 = conjecture_prediction(4);
  EXPECT_EQ(p4.a_n, 6u);
  EXPECT_EQ(p4.s_n_minus_2, 4u);
  EXPECT_EQ(p4.predicted.torsion.size(), 10u);
  for (int n = 2; n <= 14; ++n) EXPECT_TRUE(conjecture_dimension_identity(n)) << "n = " << n;
}

TEST(Conjecture, ReportLowDegreesAgree) {
  const auto rows = conjecture_report(3);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].agree);
  EXPECT_TRUE(rows[1].agree);
  EXPECT_THROW(conjecture_report(1), std::invalid_argument);
}

TEST(Conjecture, ConcurrentReportIsOrdered) {
  const auto serial = conjecture_report(5, 1);
  const auto parallel = conjecture_report(5, 3);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(parallel[i].prediction.n, static_cast<int>(i) + 2);
    EXPECT_EQ(serial[i].computed, parallel[i].computed);
  }
}

TEST(Special, VectorIndex) {
  EXPECT_EQ((SpecialVector{4, 1, 0}.index().digits), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ((SpecialVector{4, 1, 2}.index().digits), (std::vector<int>{1, 2, 1, 1}));
  EXPECT_EQ((SpecialVector{4, 2, 4}.index().digits), (std::vector<int>{2, 2, 2, 1}));
  EXPECT_THROW((SpecialVector{4, 1, 5}.index()), std::out_of_range);
  EXPECT_THROW((SpecialVector{4, 3, 1}.index()), std::out_of_range);
}

TEST(Special, ConstantVectorsAreCycles) {
  for (int n = 2; n <= 8; ++n)
    for (int j = 1; j <= 2; ++j)
      for (const auto& v : special_image(n, j, 0)) ASSERT_TRUE(v.is_zero()) << "n = " << n << " j = " << j;
  EXPECT_THROW(special_image(4, 1, 5), std::out_of_range);
}

TEST(Special, ClosedFormMatchesMatrix) {
  for (int n = 4; n <= 8; ++n)
    for (int j = 1; j <= 2; ++j)
      for (int i = 0; i <= n; ++i)
        ASSERT_EQ(special_coefficient_closed_form(n, j, i), special_coefficient(n, j, i))
            << "n = " << n << " j = " << j << " i = " << i;
}

TEST(Special, KnownCoefficients) {
  // d_5(e_{1,1}) has no e_{1,0} component; the first nonzero entry sits at i = 3.
  EXPECT_TRUE(special_coefficient(5, 1, 1).is_zero());
  EXPECT_EQ(special_coefficient(5, 1, 3), P("1 - y^4"));
  EXPECT_TRUE(special_coefficient(6, 1, 2).is_zero());
  EXPECT_EQ(special_coefficient(6, 1, 4), P("y^6 - y^2"));
  EXPECT_EQ(special_coefficient(6, 1, 3), P("1 - y^4"));
  EXPECT_EQ(special_coefficient(5, 2, 1), P("y^8 - 1"));
}

TEST(Special, ReferenceTableDivergences) {
  // Entries where the reference table disagrees with the computed matrix.
  const auto odd = reference_special_claims(5, 1, 1);
  EXPECT_NE(std::find(odd.begin(), odd.end(), P("y^2")), odd.end());
  const auto even = reference_special_claims(6, 1, 4);
  EXPECT_EQ(even, (std::vector<LaurentPoly>{P("1 - y^4")}));
  bool any_divergence = false;
  for (const auto& row : special_coefficient_report(6)) {
    EXPECT_TRUE(row.closed_form_matches);
    any_divergence = any_divergence || !row.reference_matches;
  }
  EXPECT_TRUE(any_divergence);
  // Rows the table gets right.
  for (const auto& row : special_coefficient_report(5)) {
    if (row.j == 1 && row.i >= 2) {
      EXPECT_TRUE(row.reference_matches) << "i = " << row.i;
    }
  }
}

TEST(Annihilators, FamilyGcds) {
  const auto five = annihilator_report(5);
  EXPECT_TRUE(five.odd);
  EXPECT_EQ(five.family_gcd_e1, P("y^4 - 1"));
  EXPECT_EQ(five.family_gcd_e2, P("y^4 - 1"));
  EXPECT_EQ(five.annihilator, P("y^4 - 1"));

  const auto four = annihilator_report(4);
  EXPECT_FALSE(four.odd);
  EXPECT_FALSE(four.boundary_unit);
  EXPECT_EQ(four.annihilator, P("y^4 - 1"));
  EXPECT_THROW(annihilator_report(3), std::out_of_range);
}

TEST(Annihilators, ConstantClassesHaveInfiniteOrder) {
  for (int n = 3; n <= 6; ++n) {
    EXPECT_FALSE(class_order(n, SpecialVector{n, 1, 0}.flat()).has_value()) << "n = " << n;
    EXPECT_FALSE(class_order(n, SpecialVector{n, 2, 0}.flat()).has_value()) << "n = " << n;
  }
}

TEST(Serialization, JsonRoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    const HomologyRecord r{homology(n), true};
    const auto back = homology_records_from_json(to_json(r).dump());
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0].group, r.group);
    EXPECT_EQ(back[0].conjecture_agrees, r.conjecture_agrees);
  }
  const auto j = to_json(HomologyRecord{homology(3), true});
  EXPECT_EQ(j.dump(), R"({"conjecture_agrees":true,"free_rank":2,"n":3,"torsion":["y^2 - 1","y^2 - 1","y^4 - 1","y^4 - 1"]})");
}

TEST(Serialization, CsvRoundTrip) {
  EXPECT_EQ(to_csv_row(homology(2)), "2,2,\"y^2 - 1;y^4 - 1\"");
  EXPECT_EQ(to_csv_row(homology(1)), "1,2,\"\"");
  std::string text = std::string(homology_csv_header()) + "\n";
  for (int n = 1; n <= 4; ++n) text += to_csv_row(homology(n)) + "\n";
  const auto back = homology_groups_from_csv(text);
  ASSERT_EQ(back.size(), 4u);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(back[static_cast<std::size_t>(n - 1)], homology(n));
  EXPECT_THROW(homology_groups_from_csv(""), ParseError);
  EXPECT_THROW(homology_groups_from_csv("n,free_rank,torsion\n2,2,\"y^2"), ParseError);
}
