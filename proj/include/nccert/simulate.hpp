#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "nccert/inequality.hpp"
#include "nccert/quantum.hpp"
#include "nccert/rng.hpp"

namespace nccert {

inline constexpr double kDegenerateCollapse = 1e-12;

struct SequenceStats {
  std::vector<int> tests;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  /// Outcome tuple (bit k = outcome of the k-th measurement) -> count.
  std::map<std::uint64_t, std::uint64_t> patterns;
  /// Per position in the sequence: number of shots with outcome 1.
  std::vector<std::uint64_t> ones;
  /// Shots in which exactly one measurement gave 1.
  std::uint64_t exactly_one = 0;

  double frequency(std::size_t k) const { return static_cast<double>(ones.at(k)) / static_cast<double>(shots); }
  double p_exactly_one() const { return static_cast<double>(exactly_one) / static_cast<double>(shots); }
};

/// Sequential projective measurements of rank-one tests under the Lueders rule: outcome 1
/// collapses onto v, outcome 0 onto the orthogonal complement of v, each renormalized.
/// Tests may repeat. Throws std::runtime_error on a degenerate collapse.
inline SequenceStats simulate_sequence(const OrthoRep& rep, const StateVector& psi, const std::vector<int>& tests,
                                       std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("simulate_sequence: shots must be >= 1");
  if (tests.empty() || tests.size() > 64) throw std::invalid_argument("simulate_sequence: sequence length must lie in 1..64");
  if (psi.dim() != rep.dim()) throw std::invalid_argument("simulate_sequence: dimension mismatch");
  for (int t : tests)
    if (t < 0 || t >= rep.graph().order()) throw std::invalid_argument("simulate_sequence: test index out of range");
  const std::size_t d = rep.dim();
  SequenceStats st{tests, shots, seed, {}, std::vector<std::uint64_t>(tests.size(), 0), 0};
  Rng rng(seed);
  std::vector<double> phi(d);
  for (std::uint64_t s = 0; s < shots; ++s) {
    phi = psi.components();
    std::uint64_t pattern = 0;
    for (std::size_t k = 0; k < tests.size(); ++k) {
      const auto& v = rep.vec(tests[k]).components();
      const double amp = inner(v, phi);
      const bool fired = rng.uniform() < amp * amp;
      if (fired) {
        const double sign = amp < 0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < d; ++i) phi[i] = sign * v[i];
        pattern |= std::uint64_t{1} << k;
        ++st.ones[k];
      } else {
        for (std::size_t i = 0; i < d; ++i) phi[i] -= amp * v[i];
        const double nrm = std::sqrt(inner(phi, phi));
        if (nrm < kDegenerateCollapse) throw std::runtime_error("simulate_sequence: degenerate collapse");
        for (auto& x : phi) x /= nrm;
      }
    }
    ++st.patterns[pattern];
    if (std::popcount(pattern) == 1) ++st.exactly_one;
  }
  return st;
}

struct SimulationResult {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<SequenceStats> contexts;
  /// Empirical P(exactly one) per context and its standard error.
  std::vector<double> p_exactly_one;
  std::vector<double> std_error;
  double lhs = 0;
  double lhs_std_error = 0;
};

/// Runs every context of the inequality as a sequence (tests in increasing order), context c
/// drawing from derived_seed(seed, c).
inline SimulationResult simulate_sequential(const Inequality& q, const OrthoRep& rep, const StateVector& psi,
                                            std::uint64_t shots, std::uint64_t seed, double tol = 1e-9) {
  if (q.n_tests != rep.graph().order())
    throw std::invalid_argument("simulate_sequential: test count differs from representation size");
  SimulationResult out{shots, seed, {}, {}, {}, 0, 0};
  double var = 0;
  for (std::size_t c = 0; c < q.contexts.size(); ++c) {
    auto tests = q.contexts[c].members();
    for (std::size_t a = 0; a < tests.size(); ++a)
      for (std::size_t b = a + 1; b < tests.size(); ++b)
        if (!rep.graph().adjacent(tests[a], tests[b]) ||
            std::abs(overlap(rep.vec(tests[a]), rep.vec(tests[b]))) > tol)
          throw std::invalid_argument("simulate_sequential: context " + std::to_string(c) + " is not an orthogonal clique");
    auto st = simulate_sequence(rep, psi, tests, shots, derived_seed(seed, c));
    const double p = st.p_exactly_one();
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
    const double w = to_double(q.weights[c]);
    out.lhs += w * p;
    var += w * w * se * se;
    out.p_exactly_one.push_back(p);
    out.std_error.push_back(se);
    out.contexts.push_back(std::move(st));
  }
  out.lhs_std_error = std::sqrt(var);
  return out;
}

}  // namespace nccert
