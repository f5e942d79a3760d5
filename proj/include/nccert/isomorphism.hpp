#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nccert/graph.hpp"

namespace nccert {

/// Bijection pi with u~v in g iff pi[u]~pi[v] in h.
using VertexMap = std::vector<int>;

inline bool is_isomorphism(const Graph& g, const Graph& h, const VertexMap& pi) {
  if (g.order() != h.order() || static_cast<int>(pi.size()) != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (int x : pi) {
    if (x < 0 || x >= h.order() || hit[x]) return false;
    hit[x] = true;
  }
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(pi[u], pi[v])) return false;
  return true;
}

namespace detail {

// Vertex invariant: degree followed by the sorted neighbour degrees.
inline std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nd;
    g.neighbors(v).for_each([&](int u) { nd.push_back(g.degree(u)); });
    std::sort(nd.begin(), nd.end());
    sig[v].push_back(g.degree(v));
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), sg_(vertex_signatures(g)), sh_(vertex_signatures(h)) {
    // Place vertices adjacent to already placed ones first, highest degree first.
    VertexSet placed;
    while (static_cast<int>(order_.size()) < g.order()) {
      int pick = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < g.order(); ++v) {
        if (placed.contains(v)) continue;
        int links = (g.neighbors(v) & placed).size();
        if (links > best_links || (links == best_links && g.degree(v) > best_deg)) {
          pick = v;
          best_links = links;
          best_deg = g.degree(v);
        }
      }
      order_.push_back(pick);
      placed.insert(pick);
    }
    pi_.assign(g.order(), -1);
  }

  std::optional<VertexMap> run() {
    if (extend(0)) return pi_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    int u = order_[depth];
    for (int x = 0; x < h_.order(); ++x) {
      if (used_.contains(x) || sg_[u] != sh_[x]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        int w = order_[k];
        ok = g_.adjacent(u, w) == h_.adjacent(x, pi_[w]);
      }
      if (!ok) continue;
      pi_[u] = x;
      used_.insert(x);
      if (extend(depth + 1)) return true;
      used_.erase(x);
      pi_[u] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::vector<int>> sg_, sh_;
  std::vector<int> order_;
  VertexMap pi_;
  VertexSet used_;
};

}  // namespace detail

/// Backtracking isomorphism test with degree and neighbour-degree refinement.
/// The returned map is verified edge by edge.
inline std::optional<VertexMap> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  auto pi = detail::IsoSearch(g, h).run();
  if (pi && !is_isomorphism(g, h, *pi)) return std::nullopt;
  return pi;
}

}  // namespace nccert
