#include <gtest/gtest.h>

#include <cmath>

#include "nccert/inequality.hpp"
#include "nccert/search.hpp"
#include "nccert/theta.hpp"

using namespace nccert;

TEST(Rng, DerivedSeedsAndRange) {
  EXPECT_EQ(derived_seed(0, 5), 5u);
  EXPECT_EQ(derived_seed(7, 7), 0u);
  Rng a(11), b(11);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(OrthoRepSearch, ArgumentChecks) {
  EXPECT_THROW(ortho_rep_search(cycle_graph(5), 0, 1, 0), std::invalid_argument);
  EXPECT_THROW(ortho_rep_search(cycle_graph(5), 3, 0, 0), std::invalid_argument);
}

TEST(OrthoRepSearch, PentagonInDimensionThreeReachesTheta) {
  auto r = ortho_rep_search(cycle_graph(5), 3, 10, 1);
  ASSERT_TRUE(r.found_feasible);
  EXPECT_NEAR(r.value, std::sqrt(5.0), 1e-5);
  ASSERT_TRUE(r.rep && r.state);
  EXPECT_TRUE(validate_ortho_rep(*r.rep, 1e-6, false).ok);
  EXPECT_NEAR(quantum_value(*r.rep, *r.state), r.value, 1e-6);
}

TEST(OrthoRepSearch, TwinInDimensionSixReachesTheta) {
  auto g = inequality_graph(twin()).graph;
  auto r = ortho_rep_search(g, 6, 10, 0);
  ASSERT_TRUE(r.found_feasible);
  EXPECT_NEAR(r.value, lovasz_theta(g).value, 1e-5);
  EXPECT_LE(r.residual, 1e-6);
  EXPECT_EQ(r.restarts.size(), 10u);
  for (std::size_t i = 0; i < r.restarts.size(); ++i) EXPECT_EQ(r.restarts[i].seed, derived_seed(0, i));
}

TEST(OrthoRepSearch, SameSeedIsBitIdentical) {
  auto g = cycle_graph(5);
  auto a = ortho_rep_search(g, 3, 3, 42);
  auto b = ortho_rep_search(g, 3, 3, 42);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.residual, b.residual);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(a.rep->vec(i).components(), b.rep->vec(i).components());
}

TEST(OrthoRepSearch, NeverExceedsThetaWhenAccepted) {
  for (int n : {5, 7}) {
    auto g = cycle_graph(n);
    const double theta = lovasz_theta(g).value;
    for (int d = 2; d <= 4; ++d) {
      auto r = ortho_rep_search(g, d, 4, 3);
      if (r.found_feasible) {
        EXPECT_LE(r.value, theta + 1e-5) << "C" << n << " d=" << d;
      }
    }
  }
}

TEST(OrthoRepSearch, DimensionOneOnEdgeIsInfeasible) {
  // Two orthogonal unit vectors do not fit in one dimension.
  auto r = ortho_rep_search(complete_graph(2), 1, 3, 0);
  EXPECT_FALSE(r.found_feasible);
  EXPECT_GT(r.residual, 1e-6);
}
