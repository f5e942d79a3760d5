#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "nccert/graph.hpp"
#include "nccert/linalg.hpp"

namespace nccert {

struct ThetaResult {
  /// Primal objective sum(X) at the witness; a lower bound on theta.
  double value = 0;
  /// Dual objective; an upper bound on theta.
  double dual_bound = 0;
  /// dual_bound - value.
  double gap = 0;
  bool converged = false;
  int iterations = 0;
  /// Primal witness X: trace 1, zero on edges, positive semidefinite.
  SymMatrix witness;
};

inline constexpr double kDefaultThetaTol = 1e-8;
inline constexpr int kThetaIterationCap = 500;

/// Lovasz number by a feasible primal-dual interior point method (HKM search direction).
///
/// Primal:  max <J,X>  s.t.  tr X = 1,  X_ij = 0 for ij in E,  X psd.
/// Dual:    min t      s.t.  Z = tI + sum_ij y_ij (e_i e_j' + e_j e_i') - J psd.
///
/// Both iterates start strictly feasible (X = I/n, t = n+1) and stay so; each step is
/// shrunk by 0.8 until the Cholesky test passes, then pulled back to 95% of that length.
inline ThetaResult lovasz_theta(const Graph& g, double tol = kDefaultThetaTol) {
  if (!(tol > 0)) throw std::invalid_argument("lovasz_theta: tol must be positive");
  const std::size_t n = static_cast<std::size_t>(g.order());
  const auto edges = g.edges();
  const std::size_t m = edges.size() + 1;  // slot 0 is the trace constraint

  auto dual_slack = [&](const std::vector<double>& y) {
    Matrix z(n, n, -1.0);
    for (std::size_t i = 0; i < n; ++i) z(i, i) += y[0];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      z(i, j) += y[e + 1];
      z(j, i) += y[e + 1];
    }
    return z;
  };

  Matrix x = Matrix::identity(n) * (1.0 / static_cast<double>(n));
  std::vector<double> y(m, 0.0);
  y[0] = static_cast<double>(n) + 1.0;
  Matrix z = dual_slack(y);
  double mu = dot(x, z) / (2.0 * static_cast<double>(n));

  ThetaResult res;
  for (int iter = 0;; ++iter) {
    res.value = x.sum();
    res.dual_bound = y[0];
    res.gap = res.dual_bound - res.value;
    res.iterations = iter;
    if (res.gap <= tol) {
      res.converged = true;
      break;
    }
    if (iter >= kThetaIterationCap) break;

    auto lz = cholesky(z);
    if (!lz) break;
    const Matrix zi = spd_inverse(*lz);
    const Matrix zx = zi * x;  // (ZiX)_pq
    auto a_of_zx = [&](std::size_t k) {
      if (k == 0) return zx.trace();
      auto [p, q] = edges[k - 1];
      return zx(p, q) + zx(q, p);
    };

    // Schur complement M_kl = A_k(Zi A_l X).
    Matrix schur(m, m);
    schur(0, 0) = zx.trace();
    for (std::size_t l = 1; l < m; ++l) {
      auto [i, j] = edges[l - 1];
      // A_0(Zi E_ij X) = (X Zi)_ji + (X Zi)_ij = (ZiX)_ij + (ZiX)_ji
      schur(0, l) = zx(i, j) + zx(j, i);
      schur(l, 0) = a_of_zx(l);
      for (std::size_t k = 1; k < m; ++k) {
        auto [p, q] = edges[k - 1];
        schur(k, l) = zi(p, i) * x(j, q) + zi(p, j) * x(i, q) + zi(q, i) * x(j, p) + zi(q, j) * x(i, p);
      }
    }
    std::vector<double> rhs(m);
    rhs[0] = mu * zi.trace() - 1.0;
    for (std::size_t k = 1; k < m; ++k) {
      auto [p, q] = edges[k - 1];
      rhs[k] = mu * 2.0 * zi(p, q);
    }
    std::vector<double> dy;
    try {
      dy = solve_linear(schur, rhs);
    } catch (const std::runtime_error&) {
      break;
    }
    Matrix dz(n, n);
    for (std::size_t i = 0; i < n; ++i) dz(i, i) = dy[0];
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      dz(i, j) = dz(j, i) = dy[e + 1];
    }
    Matrix dx = mu * zi - x - zi * dz * x;
    dx.symmetrize();

    auto step = [](auto&& pd_at) {
      double alpha = 1.0;
      while (!pd_at(alpha) && alpha > 1e-14) alpha *= 0.8;
      if (alpha < 1.0) alpha *= 0.95;
      return alpha;
    };
    const double ap = step([&](double a) { return cholesky(x + a * dx).has_value(); });
    std::vector<double> y_trial(m);
    const double ad = step([&](double a) {
      for (std::size_t k = 0; k < m; ++k) y_trial[k] = y[k] + a * dy[k];
      return cholesky(dual_slack(y_trial)).has_value();
    });
    if (ap <= 1e-14 && ad <= 1e-14) break;

    x += ap * dx;
    for (std::size_t k = 0; k < m; ++k) y[k] += ad * dy[k];
    z = dual_slack(y);
    mu = dot(x, z) / (2.0 * static_cast<double>(n));
    if (ap + ad > 1.8) mu *= 0.5;
  }
  res.witness = SymMatrix(x);
  return res;
}

}  // namespace nccert
