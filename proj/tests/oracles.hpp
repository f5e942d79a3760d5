#pragma once

// Independent brute-force references for the unit tests. Nothing here calls the
// algorithms under test.

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "nccert/graph.hpp"

namespace oracle {

using nccert::Graph;
using nccert::VertexSet;

inline bool clique(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) return false;
  return true;
}

inline int max_clique_size(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s)
    if (clique(g, s)) best = std::max(best, std::popcount(s));
  return best;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order() && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline std::vector<std::uint64_t> all_cliques(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s)
    if (clique(g, s)) out.push_back(s);
  return out;
}

inline std::set<std::uint64_t> maximal_cliques(const Graph& g) {
  std::set<std::uint64_t> out;
  for (auto s : all_cliques(g)) {
    bool maximal = true;
    for (int v = 0; v < g.order() && maximal; ++v)
      if (!(s >> v & 1) && clique(g, s | std::uint64_t{1} << v)) maximal = false;
    if (maximal) out.insert(s);
  }
  return out;
}

/// Smallest number of maximal cliques whose internal edges cover E(g), by subset enumeration.
inline int edge_clique_cover_number(const Graph& g) {
  const auto cliques = oracle::maximal_cliques(g);
  std::vector<std::uint64_t> mc(cliques.begin(), cliques.end());
  std::vector<std::uint64_t> edge_masks;  // per clique: bit index over the edge list
  auto edges = g.edges();
  for (auto c : mc) {
    std::uint64_t m = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if ((c >> edges[e].first & 1) && (c >> edges[e].second & 1)) m |= std::uint64_t{1} << e;
    edge_masks.push_back(m);
  }
  const std::uint64_t all = edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
  int best = static_cast<int>(edges.size());
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << mc.size()); ++pick) {
    if (std::popcount(pick) >= best) continue;
    std::uint64_t cov = 0;
    for (std::size_t k = 0; k < mc.size(); ++k)
      if (pick >> k & 1) cov |= edge_masks[k];
    if (cov == all) best = std::popcount(pick);
  }
  return best;
}

/// Number of unordered pairs of 2-subsets of {0..4} that are disjoint (Petersen edges)
/// or intersect (Johnson J(5,2) edges).
inline std::pair<int, int> two_subset_pair_counts() {
  int disjoint = 0, meeting = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = c + 1; d < 5; ++d) {
          if (a * 5 + b >= c * 5 + d) continue;
          bool share = a == c || a == d || b == c || b == d;
          (share ? meeting : disjoint)++;
        }
  return {disjoint, meeting};
}

/// Seeded Erdos-Renyi graph for property tests.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
  return g;
}

/// Affine dimension of the set of 0/1 behaviors of a scenario whose contexts are listed:
/// the behaviors are the images of all assignments under the distinct multilinear monomials
/// over subsets of the contexts, which are linearly independent functions; hence the count of
/// distinct nonempty context-subsets.
inline int monomial_polytope_dimension(const std::vector<VertexSet>& contexts) {
  std::set<std::uint64_t> monomials;
  for (auto c : contexts) {
    const std::uint64_t bits = c.bits();
    for (std::uint64_t s = bits; s; s = (s - 1) & bits) monomials.insert(s);
  }
  return static_cast<int>(monomials.size());
}

}  // namespace oracle
