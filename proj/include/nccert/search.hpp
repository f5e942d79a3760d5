#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nccert/graph.hpp"
#include "nccert/quantum.hpp"
#include "nccert/rng.hpp"

namespace nccert {

struct SearchOptions {
  double penalty = 100.0;
  double initial_step = 0.05;
  double step_growth = 1.1;
  int iteration_cap = 100000;
  /// Restarts whose final edge residual exceeds this are not ranked.
  double residual_cutoff = 1e-6;
  /// Inner tolerance of the first multiplier round, shrunk by inner_tol_decay each round.
  double first_inner_tol = 1e-3;
  double inner_tol_decay = 0.1;
  /// Inner loop stops once the largest tangent-gradient component falls below this.
  double gradient_tol = 1e-9;
  /// Constraint residual at which the multiplier loop stops.
  double residual_target = 1e-10;
};

struct RestartOutcome {
  std::uint64_t seed = 0;
  double value = 0;
  double residual = 0;
  int iterations = 0;
  bool accepted = false;
};

struct SearchResult {
  /// Best value among accepted restarts; best overall if none was accepted.
  double value = 0;
  double residual = 0;
  bool found_feasible = false;
  std::optional<OrthoRep> rep;
  std::optional<StateVector> state;
  std::vector<RestartOutcome> restarts;
};

namespace detail {

class RepAscent {
 public:
  RepAscent(const Graph& g, std::size_t dim, const SearchOptions& opt)
      : g_(g), edges_(g.edges()), n_(static_cast<std::size_t>(g.order())), d_(dim), opt_(opt),
        x_((n_ + 1) * dim), mult_(edges_.size(), 0.0) {}

  void randomize(Rng& rng) {
    for (std::size_t b = 0; b <= n_; ++b) {
      double nrm = 0;
      do {
        for (std::size_t k = 0; k < d_; ++k) x_[b * d_ + k] = rng.symmetric();
        nrm = norm(b);
      } while (nrm < 1e-3);
      for (std::size_t k = 0; k < d_; ++k) x_[b * d_ + k] /= nrm;
    }
  }

  // Augmented Lagrangian ascent: projected gradient steps with renormalization,
  // multipliers updated whenever the inner ascent stalls.
  int run() {
    int iters = 0;
    double inner_tol = opt_.first_inner_tol;
    while (iters < opt_.iteration_cap) {
      double step = opt_.initial_step;
      double cur = lagrangian(x_);
      std::vector<double> grad(x_.size()), trial(x_.size());
      while (iters < opt_.iteration_cap) {
        tangent_gradient(x_, grad);
        double gmax = 0;
        for (double v : grad) gmax = std::max(gmax, std::abs(v));
        if (gmax < std::max(inner_tol, opt_.gradient_tol) || step < 1e-14) break;
        ++iters;
        for (std::size_t k = 0; k < x_.size(); ++k) trial[k] = x_[k] + step * grad[k];
        renormalize(trial);
        const double next = lagrangian(trial);
        if (next > cur) {
          x_.swap(trial);
          cur = next;
          step = std::min(opt_.initial_step, step * opt_.step_growth);
        } else {
          step *= 0.5;
        }
      }
      const double res = residual();
      if (res <= opt_.residual_target && inner_tol <= opt_.gradient_tol) break;
      inner_tol *= opt_.inner_tol_decay;
      ++iters;  // a multiplier update counts, so a stalled inner loop still terminates
      for (std::size_t e = 0; e < edges_.size(); ++e)
        mult_[e] += 2.0 * opt_.penalty * overlap_of(x_, edges_[e].first, edges_[e].second);
    }
    return iters;
  }

  double value() const { return objective(x_); }
  double residual() const {
    double r = 0;
    for (auto [i, j] : edges_) r = std::max(r, std::abs(overlap_of(x_, i, j)));
    return r;
  }

  OrthoRep rep() const {
    std::vector<StateVector> vs;
    for (std::size_t i = 0; i < n_; ++i) vs.push_back(StateVector::normalized(block(i)));
    return OrthoRep(g_, std::move(vs));
  }
  StateVector state() const { return StateVector::normalized(block(n_)); }

 private:
  std::vector<double> block(std::size_t b) const {
    return {x_.begin() + static_cast<std::ptrdiff_t>(b * d_), x_.begin() + static_cast<std::ptrdiff_t>((b + 1) * d_)};
  }
  double norm(std::size_t b) const {
    double s = 0;
    for (std::size_t k = 0; k < d_; ++k) s += x_[b * d_ + k] * x_[b * d_ + k];
    return std::sqrt(s);
  }
  double dot_blocks(const std::vector<double>& x, std::size_t a, std::size_t b) const {
    double s = 0;
    for (std::size_t k = 0; k < d_; ++k) s += x[a * d_ + k] * x[b * d_ + k];
    return s;
  }
  double overlap_of(const std::vector<double>& x, int i, int j) const {
    return dot_blocks(x, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  double objective(const std::vector<double>& x) const {
    double f = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double o = dot_blocks(x, i, n_);
      f += o * o;
    }
    return f;
  }
  double lagrangian(const std::vector<double>& x) const {
    double l = objective(x);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const double gij = overlap_of(x, edges_[e].first, edges_[e].second);
      l -= mult_[e] * gij + opt_.penalty * gij * gij;
    }
    return l;
  }
  void tangent_gradient(const std::vector<double>& x, std::vector<double>& grad) const {
    std::fill(grad.begin(), grad.end(), 0.0);
    const std::size_t psi = n_ * d_;
    for (std::size_t i = 0; i < n_; ++i) {
      const double o = dot_blocks(x, i, n_);
      for (std::size_t k = 0; k < d_; ++k) {
        grad[i * d_ + k] += 2.0 * o * x[psi + k];
        grad[psi + k] += 2.0 * o * x[i * d_ + k];
      }
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto i = static_cast<std::size_t>(edges_[e].first), j = static_cast<std::size_t>(edges_[e].second);
      const double c = mult_[e] + 2.0 * opt_.penalty * dot_blocks(x, i, j);
      for (std::size_t k = 0; k < d_; ++k) {
        grad[i * d_ + k] -= c * x[j * d_ + k];
        grad[j * d_ + k] -= c * x[i * d_ + k];
      }
    }
    for (std::size_t b = 0; b <= n_; ++b) {
      double radial = 0;
      for (std::size_t k = 0; k < d_; ++k) radial += grad[b * d_ + k] * x[b * d_ + k];
      for (std::size_t k = 0; k < d_; ++k) grad[b * d_ + k] -= radial * x[b * d_ + k];
    }
  }
  void renormalize(std::vector<double>& x) const {
    for (std::size_t b = 0; b <= n_; ++b) {
      double s = 0;
      for (std::size_t k = 0; k < d_; ++k) s += x[b * d_ + k] * x[b * d_ + k];
      s = std::sqrt(s);
      for (std::size_t k = 0; k < d_; ++k) x[b * d_ + k] /= s;
    }
  }

  const Graph& g_;
  std::vector<std::pair<int, int>> edges_;
  std::size_t n_, d_;
  SearchOptions opt_;
  std::vector<double> x_;  // n vertex blocks then the state block, each of length d
  std::vector<double> mult_;
};

}  // namespace detail

/// Locally maximizes sum_i <v_i|psi>^2 over unit vectors in R^dim subject to <v_i|v_j> = 0 on
/// edges, from `restarts` random starts seeded with derived_seed(seed, r).
inline SearchResult ortho_rep_search(const Graph& g, int dim, int restarts, std::uint64_t seed,
                                     const SearchOptions& opt = {}) {
  if (dim < 1) throw std::invalid_argument("ortho_rep_search: dim must be >= 1");
  if (restarts < 1) throw std::invalid_argument("ortho_rep_search: restarts must be >= 1");
  SearchResult best;
  bool have_any = false;
  for (int r = 0; r < restarts; ++r) {
    const std::uint64_t s = derived_seed(seed, static_cast<std::uint64_t>(r));
    Rng rng(s);
    detail::RepAscent ascent(g, static_cast<std::size_t>(dim), opt);
    ascent.randomize(rng);
    RestartOutcome out{s, 0, 0, ascent.run(), false};
    out.value = ascent.value();
    out.residual = ascent.residual();
    out.accepted = out.residual <= opt.residual_cutoff;
    best.restarts.push_back(out);

    const bool better = !have_any || (out.accepted && !best.found_feasible) ||
                        (out.accepted == best.found_feasible && out.value > best.value);
    if (better) {
      have_any = true;
      best.value = out.value;
      best.residual = out.residual;
      best.found_feasible = out.accepted;
      best.rep = ascent.rep();
      best.state = ascent.state();
    }
  }
  return best;
}

}  // namespace nccert
