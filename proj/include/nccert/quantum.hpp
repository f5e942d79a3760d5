#pragma once

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nccert/graph.hpp"
#include "nccert/inequality.hpp"
#include "nccert/linalg.hpp"

namespace nccert {

inline constexpr double kUnitNormTol = 1e-12;

inline double inner(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product: dimensions differ");
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

/// Real unit vector.
class StateVector {
 public:
  /// Takes components that must already have unit norm (within 1e-12).
  explicit StateVector(std::vector<double> c) : c_(std::move(c)) {
    if (c_.empty()) throw std::invalid_argument("state vector: zero dimension");
    if (std::abs(std::sqrt(inner(c_, c_)) - 1.0) > kUnitNormTol)
      throw std::invalid_argument("state vector: norm differs from 1 by more than 1e-12");
  }
  /// Rescales nonzero components to unit norm.
  static StateVector normalized(std::vector<double> c) {
    const double nrm = std::sqrt(inner(c, c));
    if (!(nrm > 0) || !std::isfinite(nrm)) throw std::invalid_argument("state vector: cannot normalize zero vector");
    for (auto& x : c) x /= nrm;
    return StateVector(std::move(c));
  }
  static StateVector basis(std::size_t dim, std::size_t k) {
    std::vector<double> c(dim, 0.0);
    c.at(k) = 1.0;
    return StateVector(std::move(c));
  }

  std::size_t dim() const { return c_.size(); }
  double operator[](std::size_t k) const { return c_[k]; }
  const std::vector<double>& components() const { return c_; }

  friend double overlap(const StateVector& a, const StateVector& b) { return inner(a.c_, b.c_); }

 private:
  std::vector<double> c_;
};

/// One unit vector per vertex of a graph, intended to be orthogonal along edges.
class OrthoRep {
 public:
  OrthoRep(Graph g, std::vector<StateVector> vs) : g_(std::move(g)), v_(std::move(vs)) {
    if (static_cast<int>(v_.size()) != g_.order())
      throw std::invalid_argument("orthogonal representation: need one vector per vertex");
    for (const auto& v : v_)
      if (v.dim() != v_.front().dim()) throw std::invalid_argument("orthogonal representation: dimension mismatch across vectors");
  }

  const Graph& graph() const { return g_; }
  std::size_t dim() const { return v_.front().dim(); }
  const StateVector& vec(int i) const { return v_.at(i); }
  const std::vector<StateVector>& vectors() const { return v_; }

  Matrix gram() const {
    Matrix m(v_.size(), v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i)
      for (std::size_t j = 0; j < v_.size(); ++j) m(i, j) = overlap(v_[i], v_[j]);
    return m;
  }

  /// Largest |<v_i|v_j>| over edges.
  double edge_residual() const {
    double r = 0;
    for (auto [i, j] : g_.edges()) r = std::max(r, std::abs(overlap(v_[i], v_[j])));
    return r;
  }

 private:
  Graph g_;
  std::vector<StateVector> v_;
};

struct RepValidation {
  bool ok = true;
  double max_norm_deviation = 0;
  /// Largest |<v_i|v_j>| over edges and where it occurs.
  double max_edge_overlap = 0;
  std::pair<int, int> worst_edge{-1, -1};
  /// Smallest |<v_i|v_j>| over non-edges (faithful check only) and where it occurs.
  std::optional<double> min_nonedge_overlap;
  std::pair<int, int> worst_nonedge{-1, -1};
  std::string message;
};

/// Checks unit norms, orthogonality along edges, and (if faithful) non-orthogonality off edges.
inline RepValidation validate_ortho_rep(const OrthoRep& rep, double tol, bool faithful) {
  if (!(tol > 0)) throw std::invalid_argument("validate_ortho_rep: tol must be positive");
  RepValidation r;
  const auto& g = rep.graph();
  for (const auto& v : rep.vectors())
    r.max_norm_deviation = std::max(r.max_norm_deviation, std::abs(std::sqrt(overlap(v, v)) - 1.0));
  if (r.max_norm_deviation > tol) {
    r.ok = false;
    r.message = "vector norm deviates from 1";
  }
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) {
      const double o = std::abs(overlap(rep.vec(i), rep.vec(j)));
      if (g.adjacent(i, j)) {
        if (o >= r.max_edge_overlap) {
          if (o > r.max_edge_overlap || r.worst_edge.first < 0) r.worst_edge = {i, j};
          r.max_edge_overlap = o;
        }
      } else if (faithful && (!r.min_nonedge_overlap || o < *r.min_nonedge_overlap)) {
        r.min_nonedge_overlap = o;
        r.worst_nonedge = {i, j};
      }
    }
  if (r.max_edge_overlap > tol) {
    r.ok = false;
    r.message = "edge (" + std::to_string(r.worst_edge.first) + "," + std::to_string(r.worst_edge.second) +
                ") is not orthogonal";
  } else if (faithful && r.min_nonedge_overlap && *r.min_nonedge_overlap <= tol) {
    r.ok = false;
    r.message = "non-edge (" + std::to_string(r.worst_nonedge.first) + "," + std::to_string(r.worst_nonedge.second) +
                ") is orthogonal";
  }
  return r;
}

/// sum_i <v_i|psi>^2
inline double quantum_value(const OrthoRep& rep, const StateVector& psi) {
  if (psi.dim() != rep.dim()) throw std::invalid_argument("quantum_value: state and representation dimensions differ");
  double s = 0;
  for (const auto& v : rep.vectors()) {
    const double o = overlap(v, psi);
    s += o * o;
  }
  return s;
}

struct QuantumLhs {
  double value = 0;
  /// Per context: probability that exactly one test fires.
  std::vector<double> terms;
};

/// Quantum value of an inequality. For mutually orthogonal rank-one projectors at most one
/// fires, so each context term is sum_{j in context} <v_j|psi>^2.
inline QuantumLhs inequality_quantum_lhs(const Inequality& q, const OrthoRep& rep, const StateVector& psi,
                                         double tol = 1e-9) {
  if (q.n_tests != rep.graph().order())
    throw std::invalid_argument("inequality_quantum_lhs: test count differs from representation size");
  if (psi.dim() != rep.dim()) throw std::invalid_argument("inequality_quantum_lhs: dimension mismatch");
  QuantumLhs out;
  for (std::size_t c = 0; c < q.contexts.size(); ++c) {
    const auto ctx = q.contexts[c];
    double term = 0;
    ctx.for_each([&](int u) {
      (ctx - VertexSet::full(u + 1)).for_each([&](int v) {
        if (!rep.graph().adjacent(u, v) || std::abs(overlap(rep.vec(u), rep.vec(v))) > tol)
          throw std::invalid_argument("inequality_quantum_lhs: context " + std::to_string(c) +
                                      " is not a clique of mutually orthogonal vectors");
      });
      const double o = overlap(rep.vec(u), psi);
      term += o * o;
    });
    out.terms.push_back(term);
    out.value += to_double(q.weights[c]) * term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bundled representations.

/// Dimension-six orthogonal representation of the twin inequality's graph: overlaps are
/// 0 on edges and 1/2 on non-edges.
inline OrthoRep twin_rep_d6(const Graph& twin_graph) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), a = 1.0 / std::sqrt(8.0), h = 0.5;
  auto vec = [](double s, std::vector<double> c) {
    for (auto& x : c) x *= s;
    return StateVector::normalized(std::move(c));
  };
  std::vector<StateVector> v{
      vec(a, {r2, -r2, 0, 0, 2, 0}),    //
      vec(a, {r2, 0, 0, r2, -1, r3}),   //
      vec(h, {1, -1, -1, -1, 0, 0}),    //
      vec(h, {1, -1, 1, 1, 0, 0}),      //
      vec(a, {r2, 0, 0, -r2, -1, r3}),  //
      vec(a, {r2, 0, -r2, 0, -1, -r3}), //
      vec(a, {r2, 0, r2, 0, -1, -r3}),  //
      vec(h, {1, 1, 1, -1, 0, 0}),      //
      vec(a, {r2, r2, 0, 0, 2, 0}),     //
      vec(h, {1, 1, -1, 1, 0, 0}),
  };
  return OrthoRep(twin_graph, std::move(v));
}

/// (1,0,0,0,0,0): overlap 1/2 with every vector of twin_rep_d6.
inline StateVector twin_state_d6() { return StateVector::basis(6, 0); }

/// Pentagon "umbrella": v_i = (c, s cos(4 pi i/5), s sin(4 pi i/5)) with c^2 = 1/sqrt5, so
/// consecutive vectors are orthogonal and e_0 attains sqrt5.
inline OrthoRep kcbs_rep_d3(const Graph& pentagon) {
  const double c = std::sqrt(1.0 / std::sqrt(5.0)), s = std::sqrt(1.0 - c * c);
  std::vector<StateVector> v;
  for (int i = 0; i < 5; ++i) {
    const double phi = 4.0 * std::numbers::pi * i / 5.0;
    v.push_back(StateVector::normalized({c, s * std::cos(phi), s * std::sin(phi)}));
  }
  return OrthoRep(pentagon, std::move(v));
}

inline StateVector kcbs_state_d3() { return StateVector::basis(3, 0); }

// ---------------------------------------------------------------------------
// Text format: "dim <d>" then one line of d components per vector.

inline std::vector<std::vector<double>> read_vectors(std::istream& in) {
  std::optional<std::size_t> dim;
  std::vector<std::vector<double>> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream ss(line);
    if (!dim) {
      std::string kw;
      long long d = 0;
      if (!(ss >> kw >> d) || kw != "dim" || d < 1) throw ParseError(lineno, "expected header 'dim <d>'");
      dim = static_cast<std::size_t>(d);
    } else {
      std::vector<double> row;
      double x = 0;
      while (ss >> x) row.push_back(x);
      if (!ss.eof()) throw ParseError(lineno, "malformed component");
      if (row.size() != *dim)
        throw ParseError(lineno, "expected " + std::to_string(*dim) + " components, got " + std::to_string(row.size()));
      out.push_back(std::move(row));
      continue;
    }
    std::string extra;
    if (ss >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
  }
  if (!dim) throw ParseError(lineno, "missing header 'dim <d>'");
  return out;
}

inline OrthoRep read_ortho_rep(std::istream& in, const Graph& g) {
  auto rows = read_vectors(in);
  if (static_cast<int>(rows.size()) != g.order())
    throw ParseError(0, "representation has " + std::to_string(rows.size()) + " vectors for " +
                            std::to_string(g.order()) + " vertices");
  std::vector<StateVector> vs;
  for (auto& r : rows) vs.push_back(StateVector::normalized(std::move(r)));
  return OrthoRep(g, std::move(vs));
}

inline StateVector read_state(std::istream& in) {
  auto rows = read_vectors(in);
  if (rows.size() != 1) throw ParseError(0, "state file must hold exactly one vector");
  return StateVector::normalized(std::move(rows.front()));
}

inline void write_vectors(std::ostream& out, const std::vector<StateVector>& vs) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << "dim " << (vs.empty() ? 0 : vs.front().dim()) << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& v : vs) {
    for (std::size_t k = 0; k < v.dim(); ++k) out << (k ? " " : "") << v[k];
    out << '\n';
  }
  out.flags(flags);
  out.precision(prec);
}

inline void write_ortho_rep(std::ostream& out, const OrthoRep& rep) { write_vectors(out, rep.vectors()); }
inline void write_state(std::ostream& out, const StateVector& psi) { write_vectors(out, {psi}); }

}  // namespace nccert
