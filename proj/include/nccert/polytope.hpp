#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nccert/inequality.hpp"
#include "nccert/rational.hpp"

namespace nccert {

/// Coordinate layout of behaviors: contexts in declaration order, and within a context all
/// 2^k outcome patterns in binary order, the lowest-numbered test being the leading bit.
class BehaviorLayout {
 public:
  explicit BehaviorLayout(const Inequality& q) {
    q.validate();
    for (auto c : q.contexts) {
      offset_.push_back(size_);
      tests_.push_back(c.members());
      if (tests_.back().size() > 20) throw std::invalid_argument("behavior layout: context too large");
      size_ += std::size_t{1} << tests_.back().size();
    }
  }

  std::size_t size() const { return size_; }
  std::size_t contexts() const { return tests_.size(); }
  std::size_t patterns(std::size_t c) const { return std::size_t{1} << tests_[c].size(); }
  const std::vector<int>& tests(std::size_t c) const { return tests_[c]; }
  std::size_t index(std::size_t c, std::size_t pattern) const { return offset_[c] + pattern; }

  /// Pattern index of an assignment restricted to context c.
  std::size_t pattern_of(std::size_t c, std::uint64_t bits) const {
    std::size_t p = 0;
    for (int t : tests_[c]) p = (p << 1) | ((bits >> t) & 1U);
    return p;
  }
  /// "10" means the first (lowest) test fired and the second did not.
  std::string pattern_string(std::size_t c, std::size_t pattern) const {
    const auto k = tests_[c].size();
    std::string s(k, '0');
    for (std::size_t i = 0; i < k; ++i)
      if ((pattern >> (k - 1 - i)) & 1U) s[i] = '1';
    return s;
  }

 private:
  std::vector<std::size_t> offset_;
  std::vector<std::vector<int>> tests_;
  std::size_t size_ = 0;
};

/// Probabilities indexed by (context, outcome pattern) per BehaviorLayout.
struct Behavior {
  std::vector<Rational> coordinates;
  friend bool operator==(const Behavior&, const Behavior&) = default;
};

inline Behavior deterministic_behavior(const Inequality& q, const Assignment& a) {
  if (a.size() != q.n_tests) throw std::invalid_argument("deterministic_behavior: assignment length differs from test count");
  BehaviorLayout lay(q);
  Behavior b{std::vector<Rational>(lay.size())};
  for (std::size_t c = 0; c < lay.contexts(); ++c) b.coordinates[lay.index(c, lay.pattern_of(c, a.bits()))] = 1;
  return b;
}

/// The inequality's left-hand side as a linear functional on behavior coordinates:
/// the context weight on every single-firing pattern.
inline std::vector<Rational> inequality_functional(const Inequality& q) {
  BehaviorLayout lay(q);
  std::vector<Rational> f(lay.size());
  for (std::size_t c = 0; c < lay.contexts(); ++c)
    for (std::size_t p = 0; p < lay.patterns(c); ++p)
      if (std::popcount(p) == 1) f[lay.index(c, p)] = q.weights[c];
  return f;
}

inline Rational apply_functional(const std::vector<Rational>& f, const Behavior& b) {
  if (f.size() != b.coordinates.size()) throw std::invalid_argument("functional and behavior sizes differ");
  Rational s;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (!f[k].is_zero() && !b.coordinates[k].is_zero()) s += f[k] * b.coordinates[k];
  return s;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const BigInt& piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = piv * m[i][j];
        if (!lead.is_zero()) v -= lead * m[r][j];
        if (prev != 1) v /= prev;
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

/// Affine dimension of a point set (-1 when empty). Points are deduplicated first.
inline int affine_dimension(std::vector<std::vector<Rational>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return -1;
  std::vector<std::vector<BigInt>> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
    const BigInt scale = common_denominator(d);
    std::vector<BigInt> row;
    row.reserve(d.size());
    for (const auto& x : d) row.push_back(boost::multiprecision::numerator(Rational(x * scale)));
    diffs.push_back(std::move(row));
  }
  return bareiss_rank(std::move(diffs));
}

/// Deterministic behaviors of the scenario, in assignment order.
inline std::vector<Behavior> deterministic_vertices(const Inequality& q,
                                                    VertexModel model = VertexModel::all_assignments) {
  q.validate();
  if (q.n_tests > kEnumerationGuard)
    throw std::invalid_argument("polytope: " + std::to_string(q.n_tests) + " tests exceed the 2^24 enumeration guard");
  std::vector<Behavior> out;
  const std::uint64_t total = std::uint64_t{1} << q.n_tests;
  out.reserve(total);
  for (std::uint64_t a = 0; a < total; ++a)
    if (admissible(q, a, model)) out.push_back(deterministic_behavior(q, Assignment(q.n_tests, a)));
  return out;
}

/// Affine dimension of the noncontextual polytope (convex hull of deterministic behaviors).
inline int polytope_dimension(const Inequality& q, VertexModel model = VertexModel::all_assignments) {
  std::vector<std::vector<Rational>> pts;
  for (auto& b : deterministic_vertices(q, model)) pts.push_back(std::move(b.coordinates));
  return affine_dimension(std::move(pts));
}

struct AffineCertificate {
  VertexModel model = VertexModel::all_assignments;
  int polytope_dim = 0;
  int face_dim = 0;
  bool facet = false;
  Rational bound;
  std::size_t vertex_count = 0;
  std::size_t saturating_count = 0;
  std::size_t coordinate_count = 0;
};

/// Facet test: the vertices attaining the noncontextual bound must span an affine space of
/// dimension one less than the polytope. Uses the declared exact NCHV bound when present,
/// otherwise the enumerated maximum.
inline AffineCertificate facet_check(const Inequality& q, VertexModel model = VertexModel::all_assignments) {
  const auto verts = deterministic_vertices(q, model);
  const auto f = inequality_functional(q);
  AffineCertificate cert;
  cert.model = model;
  if (q.bounds && q.bounds->nchv.exact)
    cert.bound = *q.bounds->nchv.exact;
  else
    cert.bound = nchv_max(q).value;
  cert.vertex_count = verts.size();
  cert.coordinate_count = f.size();

  std::vector<std::vector<Rational>> all, tight;
  for (const auto& v : verts) {
    const Rational val = apply_functional(f, v);
    if (val > cert.bound)
      throw std::domain_error("facet_check: a deterministic behavior exceeds the bound " + to_string(cert.bound));
    if (val == cert.bound) tight.push_back(v.coordinates);
    all.push_back(v.coordinates);
  }
  if (tight.empty()) throw std::domain_error("facet_check: no vertex attains the bound " + to_string(cert.bound));
  std::sort(tight.begin(), tight.end());
  tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
  cert.saturating_count = tight.size();
  cert.polytope_dim = affine_dimension(std::move(all));
  cert.face_dim = affine_dimension(std::move(tight));
  cert.facet = cert.face_dim == cert.polytope_dim - 1;
  return cert;
}

}  // namespace nccert
