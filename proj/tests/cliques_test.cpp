#include <gtest/gtest.h>

#include "nccert/cliques.hpp"
#include "nccert/inequality.hpp"
#include "oracles.hpp"

using namespace nccert;

namespace {

Graph twin_graph() { return inequality_graph(twin()).graph; }

}  // namespace

TEST(MaximalCliques, PentagonEdges) {
  auto mc = maximal_cliques(cycle_graph(5));
  ASSERT_EQ(mc.size(), 5u);
  std::vector<VertexSet> expect{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
  EXPECT_EQ(mc, expect);
}

TEST(MaximalCliques, CompleteGraph) {
  auto mc = maximal_cliques(complete_graph(4));
  ASSERT_EQ(mc.size(), 1u);
  EXPECT_EQ(mc.front(), (VertexSet{0, 1, 2, 3}));
}

TEST(MaximalCliques, TwinContainsContexts) {
  auto mc = maximal_cliques(twin_graph());
  for (auto ctx : twin().contexts) EXPECT_NE(std::find(mc.begin(), mc.end(), ctx), mc.end()) << ctx;
  // J(5,2): five 4-cliques (stars) and ten triangles.
  EXPECT_EQ(mc.size(), 15u);
  EXPECT_EQ(mc.front().size(), 4);
  EXPECT_EQ(mc.back().size(), 3);
}

TEST(MaximalCliques, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = oracle::random_graph(3 + static_cast<int>(seed % 10), 0.5, seed);
    auto mc = maximal_cliques(g);
    std::set<std::uint64_t> got;
    Graph covered(g.order());
    for (std::size_t k = 0; k < mc.size(); ++k) {
      EXPECT_TRUE(g.is_clique(mc[k]));
      EXPECT_TRUE(got.insert(mc[k].bits()).second) << "duplicate clique";
      if (k > 0) {
        EXPECT_TRUE(canonical_clique_less(mc[k - 1], mc[k]));
      }
      for (std::size_t j = 0; j < mc.size(); ++j) {
        if (j != k) {
          EXPECT_FALSE(mc[k].subset_of(mc[j]));
        }
      }
    }
    EXPECT_EQ(got, oracle::maximal_cliques(g)) << "seed " << seed;
    EXPECT_TRUE(covers_edges(g, mc));
  }
}

TEST(IndependenceNumber, Examples) {
  auto c5 = independence_number(cycle_graph(5));
  EXPECT_EQ(c5.number, 2);
  EXPECT_TRUE(cycle_graph(5).is_independent(c5.witness));
  EXPECT_EQ(c5.witness.size(), 2);

  auto tw = independence_number(twin_graph());
  EXPECT_EQ(tw.number, 2);
  EXPECT_TRUE(twin_graph().is_independent(tw.witness));

  EXPECT_EQ(independence_number(empty_graph(7)).number, 7);
  EXPECT_EQ(independence_number(complete_graph(7)).number, 1);
  EXPECT_EQ(independence_number(petersen_graph()).number, 4);
}

TEST(IndependenceNumber, BranchAndBoundMatchesExhaustive) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    auto g = oracle::random_graph(n, 0.1 + 0.8 * static_cast<double>(seed % 7) / 6.0, seed);
    auto r = independence_number(g);
    EXPECT_EQ(r.number, oracle::independence_number(g)) << "seed " << seed;
    EXPECT_EQ(r.witness.size(), r.number);
    EXPECT_TRUE(g.is_independent(r.witness));
    EXPECT_EQ(maximum_clique(g).size(), oracle::max_clique_size(g));
    EXPECT_EQ(independence_number(complement(g)).number, oracle::max_clique_size(g));
  }
}

TEST(IndependenceNumber, LargeSparseGraph) {
  // 64-cycle: alpha = 32.
  auto r = independence_number(cycle_graph(64));
  EXPECT_EQ(r.number, 32);
  EXPECT_TRUE(cycle_graph(64).is_independent(r.witness));
}

TEST(EdgeCliqueCover, Examples) {
  auto c5 = edge_clique_cover_number(cycle_graph(5), 10);
  ASSERT_TRUE(c5.number);
  EXPECT_EQ(*c5.number, 5);
  EXPECT_TRUE(covers_edges(cycle_graph(5), c5.cover));

  auto k4 = edge_clique_cover_number(complete_graph(4), 10);
  ASSERT_TRUE(k4.number);
  EXPECT_EQ(*k4.number, 1);

  auto tw = edge_clique_cover_number(twin_graph(), 10);
  ASSERT_TRUE(tw.number);
  EXPECT_EQ(*tw.number, 5);
  auto contexts = twin().contexts;
  std::sort(contexts.begin(), contexts.end(), canonical_clique_less);
  EXPECT_EQ(tw.cover, contexts);

  auto none = edge_clique_cover_number(empty_graph(3), 0);
  ASSERT_TRUE(none.number);
  EXPECT_EQ(*none.number, 0);
}

TEST(EdgeCliqueCover, BudgetExhaustionIsReported) {
  auto r = edge_clique_cover_number(cycle_graph(5), 4);
  EXPECT_FALSE(r.number);
  EXPECT_EQ(r.budget, 4);
  EXPECT_TRUE(r.cover.empty());
}

TEST(EdgeCliqueCover, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    auto g = oracle::random_graph(4 + static_cast<int>(seed % 5), 0.55, seed);
    auto r = edge_clique_cover_number(g, 40);
    ASSERT_TRUE(r.number);
    EXPECT_EQ(*r.number, oracle::edge_clique_cover_number(g)) << "seed " << seed;
    EXPECT_EQ(static_cast<int>(r.cover.size()), *r.number);
    EXPECT_TRUE(covers_edges(g, r.cover));
    if (*r.number > 0) {
      EXPECT_FALSE(edge_clique_cover_number(g, *r.number - 1).number);
    }
  }
}
