#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nccert/cliques.hpp"
#include "nccert/graph.hpp"
#include "nccert/rational.hpp"

namespace nccert {

/// maximize objective.x  subject to  rows[i].x <= rhs[i],  0 <= x,  x[j] <= upper[j] when set.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::optional<Rational>> upper;

  std::size_t variables() const { return objective.size(); }

  void validate() const {
    if (rows.size() != rhs.size()) throw std::invalid_argument("LP: row count and rhs size differ");
    for (const auto& r : rows)
      if (r.size() != variables()) throw std::invalid_argument("LP: row width differs from objective");
    if (!upper.empty() && upper.size() != variables())
      throw std::invalid_argument("LP: bound vector width differs from objective");
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational optimum;
  std::vector<Rational> x;
};

namespace detail {

// Dense tableau with Bland's rule. Columns: structural, slack/surplus, artificial; rhs kept apart.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<int> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  // Returns false if unbounded. Columns with allowed[j] == false never enter.
  bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    const std::size_t cols = cost.size();
    for (;;) {
      int enter = -1;
      for (std::size_t j = 0; j < cols && enter < 0; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < a_.size(); ++i)
          if (!a_[i][j].is_zero()) reduced -= cost[basis_[i]] * a_[i][j];
        if (reduced > 0) enter = static_cast<int>(j);
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    Rational p = a_[row][col];
    for (auto& x : a_[row]) x /= p;
    b_[row] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (static_cast<int>(i) == row || a_[i][col].is_zero()) continue;
      Rational f = a_[i][col];
      for (std::size_t j = 0; j < a_[i].size(); ++j)
        if (!a_[row][j].is_zero()) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(row));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  std::size_t rows() const { return a_.size(); }
  const std::vector<Rational>& row(std::size_t i) const { return a_[i]; }
  const Rational& rhs(std::size_t i) const { return b_[i]; }
  int basic(std::size_t i) const { return basis_[i]; }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
};

}  // namespace detail

/// Exact two-phase primal simplex with Bland's rule.
inline LpSolution simplex_solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.variables();
  std::vector<std::vector<Rational>> rows = lp.rows;
  std::vector<Rational> rhs = lp.rhs;
  for (std::size_t j = 0; j < lp.upper.size(); ++j) {
    if (!lp.upper[j]) continue;
    std::vector<Rational> r(n);
    r[j] = 1;
    rows.push_back(std::move(r));
    rhs.push_back(*lp.upper[j]);
  }
  const std::size_t m = rows.size();
  std::size_t n_art = 0;
  for (const auto& b : rhs) n_art += b < 0 ? 1 : 0;
  const std::size_t cols = n + m + n_art;

  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols));
  std::vector<Rational> b(m);
  std::vector<int> basis(m);
  std::size_t art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = flip ? -rows[i][j] : rows[i][j];
    a[i][n + i] = flip ? -1 : 1;
    b[i] = flip ? -rhs[i] : rhs[i];
    if (flip) {
      a[i][art] = 1;
      basis[i] = static_cast<int>(art++);
    } else {
      basis[i] = static_cast<int>(n + i);
    }
  }
  detail::Tableau t(std::move(a), std::move(b), std::move(basis));
  std::vector<bool> allowed(cols, true);

  if (n_art > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = n + m; j < cols; ++j) phase1[j] = -1;
    t.maximize(phase1, allowed);
    Rational infeas;
    for (std::size_t i = 0; i < t.rows(); ++i)
      if (t.basic(i) >= static_cast<int>(n + m)) infeas += t.rhs(i);
    if (infeas > 0) return {LpStatus::infeasible, {}, {}};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basic(i) < static_cast<int>(n + m)) continue;
      int col = -1;
      for (std::size_t j = 0; j < n + m && col < 0; ++j)
        if (!t.row(i)[j].is_zero()) col = static_cast<int>(j);
      if (col >= 0)
        t.pivot(static_cast<int>(i), col);
      else
        t.drop_row(i);
    }
    for (std::size_t j = n + m; j < cols; ++j) allowed[j] = false;
  }

  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  if (!t.maximize(cost, allowed)) return {LpStatus::unbounded, {}, {}};

  LpSolution sol{LpStatus::optimal, 0, std::vector<Rational>(n)};
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basic(i) < static_cast<int>(n)) sol.x[t.basic(i)] = t.rhs(i);
  for (std::size_t j = 0; j < n; ++j) sol.optimum += lp.objective[j] * sol.x[j];
  return sol;
}

/// The clique-constrained packing LP of g: maximize sum w subject to 0 <= w <= 1 and
/// sum over each listed clique <= 1.
inline LinearProgram packing_lp(const Graph& g, const std::vector<VertexSet>& cliques) {
  const auto n = static_cast<std::size_t>(g.order());
  LinearProgram lp;
  lp.objective.assign(n, Rational(1));
  lp.upper.assign(n, Rational(1));
  for (auto c : cliques) {
    std::vector<Rational> row(n);
    c.for_each([&](int v) { row[v] = 1; });
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(1);
  }
  return lp;
}

struct PackingResult {
  Rational value;
  std::vector<Rational> weights;
};

/// Fractional packing number, with one constraint per maximal clique.
inline PackingResult fractional_packing_number(const Graph& g) {
  auto sol = simplex_solve(packing_lp(g, maximal_cliques(g)));
  if (sol.status != LpStatus::optimal) throw std::logic_error("packing LP is bounded and feasible");
  return {sol.optimum, sol.x};
}

}  // namespace nccert
