#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nccert {

inline constexpr int kMaxVertices = 64;

/// Bit-set over vertex labels 0..63.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static VertexSet from(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }
  /// The set {0, ..., n-1}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Lowest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (auto b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (auto b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  /// Lexicographic order on the ascending member lists.
  friend bool lex_less(VertexSet a, VertexSet b) {
    auto x = a.bits_, y = b.bits_;
    while (x && y) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return !x && y;
  }

 private:
  std::uint64_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << '{';
  bool first = true;
  s.for_each([&](int v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  return os << '}';
}

/// Undirected simple graph with bit-set adjacency.
class Graph {
 public:
  explicit Graph(int n) : adj_(check_order(n)) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return adj_.at(v).size(); }
  bool adjacent(int u, int v) const { return adj_.at(u).contains(v); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  int edge_count() const {
    int twice = 0;
    for (auto s : adj_) twice += s.size();
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      (adj_[u] - VertexSet::full(u + 1)).for_each([&](int v) { out.emplace_back(u, v); });
    return out;
  }

  bool is_clique(VertexSet s) const {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && (s - VertexSet{v}).subset_of(adj_[v]); });
    return ok;
  }
  bool is_independent(VertexSet s) const {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && (s & adj_[v]).empty(); });
    return ok;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    for (int v = 0; v < order(); ++v) d.push_back(degree(v));
    std::sort(d.begin(), d.end());
    return d;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t check_order(int n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("graph order must lie in 1..64, got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= order())
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(order() - 1));
  }

  std::vector<VertexSet> adj_;
};

using CliqueCover = std::vector<VertexSet>;

/// True when every member is a clique of g and their internal edges are exactly E(g).
inline bool covers_edges(const Graph& g, const CliqueCover& cover) {
  Graph covered(g.order());
  for (auto c : cover) {
    if (!c.subset_of(g.vertices()) || !g.is_clique(c)) return false;
    c.for_each([&](int u) { (c - VertexSet::full(u + 1)).for_each([&](int v) { covered.add_edge(u, v); }); });
  }
  return covered == g;
}

// ---------------------------------------------------------------------------
// Named constructors

inline Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(k));
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

/// The ten 2-subsets of {0,...,4} in lexicographic order: {0,1},{0,2},...,{3,4}.
inline std::vector<VertexSet> two_subsets_of_five() {
  std::vector<VertexSet> out;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) out.push_back(VertexSet{a, b});
  return out;
}

/// Kneser graph K(5,2): 2-subsets adjacent iff disjoint.
inline Graph petersen_graph() {
  auto pairs = two_subsets_of_five();
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if ((pairs[i] & pairs[j]).empty()) g.add_edge(i, j);
  return g;
}

/// Johnson graph J(5,2): 2-subsets adjacent iff they share an element.
inline Graph johnson_5_2_graph() {
  auto pairs = two_subsets_of_five();
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (!(pairs[i] & pairs[j]).empty()) g.add_edge(i, j);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

struct InducedSubgraph {
  Graph graph;
  /// label_map[new label] = original vertex.
  std::vector<int> label_map;
};

/// Subgraph induced by s, relabelled to 0..|s|-1 in increasing original order.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  if (!s.subset_of(g.vertices())) throw std::out_of_range("induced_subgraph: vertex set exceeds graph");
  auto map = s.members();
  Graph h(static_cast<int>(map.size()));
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = i + 1; j < map.size(); ++j)
      if (g.adjacent(map[i], map[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(h), std::move(map)};
}

// ---------------------------------------------------------------------------
// Text format: "n <count>" then one "u v" line per edge; '#' starts a comment.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
  return line;
}

inline bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::optional<Graph> g;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream ss(line);
    if (!g) {
      std::string kw;
      int n = 0;
      if (!(ss >> kw >> n) || kw != "n") throw ParseError(lineno, "expected header 'n <count>'");
      if (n < 1 || n > kMaxVertices) throw ParseError(lineno, "vertex count must lie in 1..64");
      g.emplace(n);
    } else {
      int u = 0, v = 0;
      if (!(ss >> u >> v)) throw ParseError(lineno, "expected edge 'u v'");
      if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
        throw ParseError(lineno, "edge endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      g->add_edge(u, v);
    }
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
  }
  if (!g) throw ParseError(lineno, "missing header 'n <count>'");
  return *g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace nccert
