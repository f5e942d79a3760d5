#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nccert/graph.hpp"
#include "nccert/rational.hpp"

namespace nccert {

/// Annotated bound: a real value, exact when a rational form exists.
struct Bound {
  double value = 0;
  std::optional<Rational> exact;
  std::string label;

  static Bound rational(const Rational& r) { return {to_double(r), r, to_string(r)}; }
  static Bound real(double v, std::string label) { return {v, std::nullopt, std::move(label)}; }
};

struct InequalityBounds {
  Bound nchv, qm, gp;
};

/// Noncontextuality inequality: sum over contexts of weight * P(exactly one test in the context fires).
struct Inequality {
  std::string name;
  int n_tests = 0;
  std::vector<VertexSet> contexts;
  std::vector<Rational> weights;
  std::optional<InequalityBounds> bounds;

  void validate() const {
    if (n_tests < 1 || n_tests > kMaxVertices) throw std::invalid_argument("inequality: test count must lie in 1..64");
    if (contexts.size() != weights.size()) throw std::invalid_argument("inequality: one weight per context required");
    if (contexts.empty()) throw std::invalid_argument("inequality: no contexts");
    VertexSet seen;
    for (std::size_t c = 0; c < contexts.size(); ++c) {
      if (contexts[c].empty()) throw std::invalid_argument("inequality: empty context");
      if (!contexts[c].subset_of(VertexSet::full(n_tests)))
        throw std::invalid_argument("inequality: context references a test index >= n_tests");
      if (weights[c] < 0) throw std::invalid_argument("inequality: negative context weight");
      seen = seen | contexts[c];
    }
    if (seen != VertexSet::full(n_tests)) throw std::invalid_argument("inequality: some test appears in no context");
  }

  /// Sum of the weights of the contexts containing each test.
  std::vector<Rational> test_weight_sums() const {
    std::vector<Rational> s(n_tests);
    for (std::size_t c = 0; c < contexts.size(); ++c) contexts[c].for_each([&](int v) { s[v] += weights[c]; });
    return s;
  }

  Rational total_weight() const {
    Rational t;
    for (const auto& w : weights) t += w;
    return t;
  }
};

/// KCBS: five contexts {i, i+1 mod 5}, weight 1/2, bounds 2 / sqrt5 / 5/2.
inline Inequality kcbs() {
  Inequality q;
  q.name = "kcbs";
  q.n_tests = 5;
  for (int i = 0; i < 5; ++i) {
    q.contexts.push_back(VertexSet{i, (i + 1) % 5});
    q.weights.push_back(make_rational(1, 2));
  }
  q.bounds = InequalityBounds{Bound::rational(2), Bound::real(std::sqrt(5.0), "sqrt(5)"),
                              Bound::rational(make_rational(5, 2))};
  return q;
}

/// Ten tests, contexts {i, i+1, i+5, i+7} with the first two indices mod 5 and
/// the last two in 5..9 mod 5 (so 3+7 wraps to 5); bounds 2 / 5/2 / 5/2.
inline Inequality twin() {
  Inequality q;
  q.name = "twin";
  q.n_tests = 10;
  for (int i = 0; i < 5; ++i) {
    q.contexts.push_back(VertexSet{i, (i + 1) % 5, 5 + i % 5, 5 + (i + 2) % 5});
    q.weights.push_back(make_rational(1, 2));
  }
  q.bounds = InequalityBounds{Bound::rational(2), Bound::rational(make_rational(5, 2)),
                              Bound::rational(make_rational(5, 2))};
  return q;
}

struct InequalityGraph {
  Graph graph;
  /// The contexts, which form an edge clique cover of graph.
  CliqueCover cover;
  std::vector<Rational> test_weight_sums;
  /// Per-test weights sum to one, so the functional equals sum_i P(test i fires).
  bool reduction_exact = false;
};

/// Scenario whose tests are the edges of h and whose contexts are the edge stars of the
/// non-isolated vertices, weight 1/2 each; every test lies in exactly two contexts and the
/// exclusivity graph is the line graph of h. kcbs() is this scenario on C5, twin() on K5.
inline Inequality star_scenario(const Graph& h, std::string name = "stars") {
  const auto edges = h.edges();
  if (edges.empty()) throw std::invalid_argument("star_scenario: graph has no edges");
  if (edges.size() > static_cast<std::size_t>(kMaxVertices)) throw std::invalid_argument("star_scenario: more than 64 edges");
  Inequality q;
  q.name = std::move(name);
  q.n_tests = static_cast<int>(edges.size());
  for (int v = 0; v < h.order(); ++v) {
    VertexSet star;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == v || edges[e].second == v) star.insert(static_cast<int>(e));
    if (star.empty()) continue;
    q.contexts.push_back(star);
    q.weights.push_back(make_rational(1, 2));
  }
  return q;
}

/// Exclusivity graph of an inequality: tests adjacent iff they share a context.
inline InequalityGraph inequality_graph(const Inequality& q) {
  q.validate();
  InequalityGraph out{Graph(q.n_tests), q.contexts, q.test_weight_sums(), true};
  for (std::size_t t = 0; t < out.test_weight_sums.size(); ++t)
    if (out.test_weight_sums[t] != 1)
      throw std::invalid_argument("inequality_graph: weights of test " + std::to_string(t) + " sum to " +
                                  to_string(out.test_weight_sums[t]) + ", not 1");
  for (auto c : q.contexts)
    c.for_each([&](int u) { (c - VertexSet::full(u + 1)).for_each([&](int v) { out.graph.add_edge(u, v); }); });
  return out;
}

/// Deterministic value assignment; bit i is the value of test i.
class Assignment {
 public:
  Assignment(int n_tests, std::uint64_t bits) : n_(n_tests), bits_(bits) {
    if (n_tests < 1 || n_tests > kMaxVertices) throw std::invalid_argument("assignment: bad length");
    if (n_tests < 64 && (bits >> n_tests) != 0) throw std::invalid_argument("assignment: bits beyond length");
  }
  /// "10100" sets tests 0 and 2.
  static Assignment parse(const std::string& s) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        b |= std::uint64_t{1} << i;
      else if (s[i] != '0')
        throw std::invalid_argument("assignment: expected only 0/1 characters");
    }
    return Assignment(static_cast<int>(s.size()), b);
  }

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool value(int test) const { return (bits_ >> test) & 1U; }
  VertexSet ones() const { return VertexSet(bits_); }
  std::string str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) s += value(i) ? '1' : '0';
    return s;
  }

 private:
  int n_;
  std::uint64_t bits_;
};

/// Weighted count of contexts with exactly one test set to 1.
inline Rational evaluate_assignment(const Inequality& q, const Assignment& a) {
  if (a.size() != q.n_tests) throw std::invalid_argument("evaluate_assignment: assignment length differs from test count");
  Rational v;
  for (std::size_t c = 0; c < q.contexts.size(); ++c)
    if ((q.contexts[c] & a.ones()).size() == 1) v += q.weights[c];
  return v;
}

/// Which deterministic assignments count as noncontextual vertices.
enum class VertexModel {
  /// Every one of the 2^n assignments.
  all_assignments,
  /// Only assignments with at most one test firing per context (tests in a context are
  /// mutually exclusive), i.e. independent sets of the exclusivity graph.
  exclusive,
};

inline const char* to_string(VertexModel m) { return m == VertexModel::exclusive ? "exclusive" : "all"; }


inline bool admissible(const Inequality& q, std::uint64_t bits, VertexModel m) {
  if (m == VertexModel::all_assignments) return true;
  return std::all_of(q.contexts.begin(), q.contexts.end(),
                     [&](VertexSet c) { return std::popcount(c.bits() & bits) <= 1; });
}

inline constexpr int kEnumerationGuard = 24;

struct NchvResult {
  Rational value;
  Assignment witness;
};

/// Exact maximum over the 2^n deterministic assignments (or only the exclusive ones);
/// ties go to the smallest assignment.
inline NchvResult nchv_max(const Inequality& q, VertexModel model = VertexModel::all_assignments) {
  q.validate();
  if (q.n_tests > kEnumerationGuard)
    throw std::invalid_argument("nchv_max: " + std::to_string(q.n_tests) + " tests exceed the 2^24 enumeration guard");
  // Integer numerators over the common denominator keep the inner loop exact and cheap.
  const BigInt den = common_denominator(q.weights);
  std::vector<BigInt> scaled;
  for (const auto& w : q.weights) scaled.push_back(boost::multiprecision::numerator(Rational(w * den)));
  std::vector<std::uint64_t> masks;
  for (auto c : q.contexts) masks.push_back(c.bits());

  const std::uint64_t total = std::uint64_t{1} << q.n_tests;
  BigInt best = -1;
  std::uint64_t arg = 0;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!admissible(q, a, model)) continue;
    BigInt v = 0;
    for (std::size_t c = 0; c < masks.size(); ++c)
      if (std::popcount(masks[c] & a) == 1) v += scaled[c];
    if (v > best) {
      best = v;
      arg = a;
    }
  }
  return {Rational(best, den), Assignment(q.n_tests, arg)};
}

// ---------------------------------------------------------------------------
// Text format: "tests <n>" then "context <p/q>: i j k ..." per context; '#' comments.
// An optional "bounds <nchv> <qm> <gp>" line declares bounds; nchv and gp are rationals,
// qm a rational or a decimal.

inline Inequality read_inequality(std::istream& in, std::string name = "file") {
  Inequality q;
  q.name = std::move(name);
  std::string raw;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream ss(line);
    std::string kw;
    ss >> kw;
    if (!have_header) {
      if (kw != "tests" || !(ss >> q.n_tests)) throw ParseError(lineno, "expected header 'tests <n>'");
      if (q.n_tests < 1 || q.n_tests > kMaxVertices) throw ParseError(lineno, "test count must lie in 1..64");
      have_header = true;
    } else if (kw == "bounds") {
      if (q.bounds) throw ParseError(lineno, "duplicate bounds line");
      std::string tok[3];
      if (!(ss >> tok[0] >> tok[1] >> tok[2])) throw ParseError(lineno, "expected 'bounds <nchv> <qm> <gp>'");
      try {
        Bound qm;
        if (tok[1].find_first_of(".eE") != std::string::npos) {
          std::size_t used = 0;
          const double v = std::stod(tok[1], &used);
          if (used != tok[1].size() || !std::isfinite(v)) throw std::invalid_argument("malformed bound '" + tok[1] + "'");
          qm = Bound::real(v, tok[1]);
        } else {
          qm = Bound::rational(parse_rational(tok[1]));
        }
        q.bounds = InequalityBounds{Bound::rational(parse_rational(tok[0])), qm, Bound::rational(parse_rational(tok[2]))};
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
    } else {
      if (kw != "context") throw ParseError(lineno, "expected 'context <weight>: tests...'");
      std::string w;
      ss >> w;
      if (w.empty() || w.back() != ':') throw ParseError(lineno, "weight must end with ':'");
      w.pop_back();
      try {
        q.weights.push_back(parse_rational(w));
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      VertexSet ctx;
      int t = 0;
      while (ss >> t) {
        if (t < 0 || t >= q.n_tests) throw ParseError(lineno, "test index out of range");
        if (ctx.contains(t)) throw ParseError(lineno, "duplicate test in context");
        ctx.insert(t);
      }
      if (!ss.eof()) throw ParseError(lineno, "malformed test index");
      if (ctx.empty()) throw ParseError(lineno, "empty context");
      q.contexts.push_back(ctx);
    }
    std::string extra;
    if (ss.clear(), ss >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing header 'tests <n>'");
  if (q.contexts.empty()) throw ParseError(lineno, "no contexts");
  try {
    q.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  return q;
}

inline void write_inequality(std::ostream& out, const Inequality& q) {
  out << "tests " << q.n_tests << '\n';
  for (std::size_t c = 0; c < q.contexts.size(); ++c) {
    out << "context " << to_string(q.weights[c]) << ':';
    q.contexts[c].for_each([&](int t) { out << ' ' << t; });
    out << '\n';
  }
  if (q.bounds) {
    auto text = [](const Bound& b) {
      if (b.exact) return to_string(*b.exact);
      std::ostringstream o;
      o << std::setprecision(std::numeric_limits<double>::max_digits10) << std::showpoint << b.value;
      return o.str();
    };
    out << "bounds " << text(q.bounds->nchv) << ' ' << text(q.bounds->qm) << ' ' << text(q.bounds->gp) << '\n';
  }
}

}  // namespace nccert
