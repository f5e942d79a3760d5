#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nccert/graph.hpp"

namespace nccert {

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    int c = (p & g.neighbors(u)).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  (p - g.neighbors(pivot)).for_each([&](int v) {
    VertexSet rv = r;
    rv.insert(v);
    bron_kerbosch(g, rv, p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace detail

/// Size-descending, then lexicographic on member lists.
inline bool canonical_clique_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return lex_less(a, b);
}

/// All inclusion-maximal cliques (Bron-Kerbosch with pivoting), canonically sorted.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  detail::bron_kerbosch(g, {}, g.vertices(), {}, out);
  std::sort(out.begin(), out.end(), canonical_clique_less);
  return out;
}

namespace detail {

// Branch-and-bound maximum clique with greedy-colouring bounds.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {
    order_.resize(g.order());
    for (int v = 0; v < g.order(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  VertexSet run() {
    std::vector<int> cand = order_;
    expand({}, cand);
    return best_;
  }

 private:
  // Greedy sequential colouring of cand (in the given order); returns vertices sorted by
  // colour class and the running colour number, which bounds the clique size from each prefix.
  void colour_sort(const std::vector<int>& cand, std::vector<int>& sorted, std::vector<int>& bound) const {
    sorted.clear();
    bound.clear();
    std::vector<int> rest = cand;
    int colour = 0;
    while (!rest.empty()) {
      ++colour;
      VertexSet cls;
      std::vector<int> next;
      for (int v : rest) {
        if ((g_.neighbors(v) & cls).empty()) {
          cls.insert(v);
          sorted.push_back(v);
          bound.push_back(colour);
        } else {
          next.push_back(v);
        }
      }
      rest.swap(next);
    }
  }

  void expand(VertexSet r, const std::vector<int>& cand) {
    std::vector<int> sorted, bound;
    colour_sort(cand, sorted, bound);
    VertexSet remaining = VertexSet::from(cand);
    for (int k = static_cast<int>(sorted.size()) - 1; k >= 0; --k) {
      if (r.size() + bound[k] <= best_.size()) return;
      int v = sorted[k];
      VertexSet rv = r;
      rv.insert(v);
      std::vector<int> next;
      for (int u : cand)
        if (remaining.contains(u) && g_.adjacent(u, v)) next.push_back(u);
      if (next.empty()) {
        if (rv.size() > best_.size()) best_ = rv;
      } else {
        expand(rv, next);
      }
      remaining.erase(v);
    }
  }

  const Graph& g_;
  std::vector<int> order_;
  VertexSet best_;
};

}  // namespace detail

/// A maximum clique of g.
inline VertexSet maximum_clique(const Graph& g) { return detail::MaxCliqueSearch(g).run(); }

struct IndependenceResult {
  int number = 0;
  VertexSet witness;
};

/// Independence number via maximum clique on the complement, with one maximum independent set.
inline IndependenceResult independence_number(const Graph& g) {
  auto s = maximum_clique(complement(g));
  return {s.size(), s};
}

struct EdgeCliqueCoverResult {
  /// Exact edge clique cover number, or empty when it exceeds the budget.
  std::optional<int> number;
  CliqueCover cover;
  int budget = 0;
};

namespace detail {

class EdgeCoverSearch {
 public:
  explicit EdgeCoverSearch(const Graph& g) : g_(g), cliques_(maximal_cliques(g)) {
    for (auto c : cliques_) max_edges_ = std::max(max_edges_, c.size() * (c.size() - 1) / 2);
  }

  bool search(int depth, std::vector<VertexSet>& uncovered, int uncovered_count, CliqueCover& chosen) {
    if (uncovered_count == 0) return true;
    if (depth == 0 || uncovered_count > depth * max_edges_) return false;
    int u = 0;
    while (uncovered[u].empty()) ++u;
    int v = uncovered[u].front();
    for (auto c : cliques_) {
      if (!c.contains(u) || !c.contains(v)) continue;
      auto saved = uncovered;
      int removed = 0;
      c.for_each([&](int a) {
        removed += (uncovered[a] & c).size();
        uncovered[a] = uncovered[a] - c;
      });
      chosen.push_back(c);
      if (search(depth - 1, uncovered, uncovered_count - removed / 2, chosen)) return true;
      chosen.pop_back();
      uncovered = std::move(saved);
    }
    return false;
  }

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  std::vector<VertexSet> cliques_;
  int max_edges_ = 0;
};

}  // namespace detail

/// Minimum number of cliques covering every edge, by iterative deepening over the
/// lexicographically first uncovered edge. Reports no number when it exceeds budget.
inline EdgeCliqueCoverResult edge_clique_cover_number(const Graph& g, int budget) {
  detail::EdgeCoverSearch search(g);
  const int total = g.edge_count();
  for (int k = 0; k <= budget; ++k) {
    std::vector<VertexSet> uncovered;
    for (int v = 0; v < g.order(); ++v) uncovered.push_back(g.neighbors(v));
    CliqueCover chosen;
    if (search.search(k, uncovered, total, chosen)) {
      std::sort(chosen.begin(), chosen.end(), canonical_clique_less);
      return {k, std::move(chosen), budget};
    }
  }
  return {std::nullopt, {}, budget};
}

}  // namespace nccert
