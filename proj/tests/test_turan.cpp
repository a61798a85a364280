#include <gtest/gtest.h>

#include <cmath>

#include "oddprism/canonical.hpp"
#include "oddprism/patterns.hpp"
#include "oddprism/spectral.hpp"
#include "oddprism/turan.hpp"

using namespace oddprism;

TEST(ExFormula, SmallValues) {
  // max over a of a(1+n-a) + (j^2-3j)/2, j = a mod 3
  EXPECT_EQ(ex_formula(6).value, 12);
  EXPECT_EQ(ex_formula(6).n_a, 3u);
  EXPECT_EQ(ex_formula(7).value, 15);
  EXPECT_EQ(ex_formula(7).n_a, 3u);
  EXPECT_EQ(ex_formula(10).value, 30);
  EXPECT_EQ(ex_split_value(10, 6), 30);
  EXPECT_EQ(ex_split_value(10, 5), 29);  // j = 2 costs one edge
  EXPECT_EQ(ex_split_value(10, 4), 27);  // j = 1 costs one edge
  EXPECT_THROW(ex_formula(1), std::invalid_argument);
}

TEST(ExFormula, BruteMaxOverSplitsAndConstructionEdgeCount) {
  for (std::size_t n = 4; n <= 2000; ++n) {
    const auto ex = ex_formula(n);
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::size_t arg = 0;
    for (std::size_t a = 1; a < n; ++a) {
      const auto A = static_cast<std::int64_t>(a);
      const auto B = static_cast<std::int64_t>(n - a);
      // triangles keep all 3 edges per 3 vertices; leftover 1 vertex costs 0,
      // leftover pair carries one edge
      const std::int64_t inside = 3 * (A / 3) + (A % 3 == 2 ? 1 : 0);
      const std::int64_t v = A * B + inside;
      if (v > best) {
        best = v;
        arg = a;
      }
    }
    ASSERT_EQ(ex.value, best) << "n=" << n;
    ASSERT_EQ(ex.n_a, arg) << "n=" << n;
    if (n <= 300) {
      ASSERT_EQ(static_cast<std::int64_t>(ex_extremal_construction(n, ex.n_a).edge_count()), ex.value) << n;
    }
  }
}

TEST(ExFormula, ConstructionIsPrismFree) {
  for (std::size_t n = 6; n <= 12; ++n) {
    const auto ex = ex_formula(n);
    EXPECT_TRUE(is_prism_free(ex_extremal_construction(n, ex.n_a), 1)) << n;
  }
}

TEST(ExFormula, P4ExtremalGraph) {
  EXPECT_EQ(p4_extremal_graph(6).edge_count(), 6u);
  EXPECT_EQ(p4_extremal_graph(7).edge_count(), 6u);
  EXPECT_EQ(p4_extremal_graph(8).edge_count(), 7u);
  for (std::size_t m = 1; m <= 12; ++m) EXPECT_FALSE(contains_subgraph(p4_extremal_graph(m), make_path(4))) << m;
  EXPECT_THROW(ex_extremal_construction(3, 4), std::invalid_argument);
}

TEST(SpexClosedForm, NineVertexValue) {
  const auto c = spex_closed_form(9);
  EXPECT_EQ(c.n1, 4u);
  EXPECT_EQ(c.n2, 4u);
  EXPECT_NEAR(c.value, 2 + 2 * std::sqrt(3.0), 1e-12);
  EXPECT_EQ(c.quotient_polynomial.to_string(), "x^3 - 24x - 32");
  EXPECT_EQ(c.as_printed_polynomial.to_string(), "x^3 - 24x - 2");
  EXPECT_GT(c.gap, 0.5);
  EXPECT_THROW(spex_closed_form(2), std::invalid_argument);
}

TEST(SpexClosedForm, MatchesSpectralRadiusOfCandidate) {
  for (std::size_t n = 5; n <= 200; ++n) {
    const auto c = spex_closed_form(n);
    ASSERT_NEAR(c.value, spectral_radius(spex_candidate(n)).radius, 1e-8) << "n=" << n;
    ASSERT_EQ(c.n1 + c.n2 + 1, n);
    ASSERT_GT(c.gap, 0.0);
  }
}

TEST(ApexFactorisation, FourFourReport) {
  const auto r = apex_factorisation_report(4, 4);
  EXPECT_FALSE(r.as_printed_identity_holds);
  EXPECT_TRUE(r.derived_identity_holds);
  EXPECT_LE(r.derived_cubic_residual, 1e-6);
  EXPECT_GT(r.as_printed_cubic_residual, 1.0);
  EXPECT_NEAR(r.derived_root, r.dense_radius, 1e-9);
  EXPECT_GT(r.gap, 0.0);
}

TEST(ApexFactorisation, IdentityGrid) {
  for (std::size_t n1 = 1; n1 <= 10; ++n1)
    for (std::size_t n2 = 1; n2 <= 10; ++n2) {
      const auto r = apex_factorisation_report(n1, n2);
      EXPECT_TRUE(r.derived_identity_holds);
      EXPECT_LE(r.derived_cubic_residual, 1e-6);
      EXPECT_EQ(r.as_printed_identity_holds, n1 * n2 == 1);
    }
}
