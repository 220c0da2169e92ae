#include "ddsteps/lp.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ddsteps {

namespace {

// min cost^T s  s.t.  E s = f, s >= 0.
struct StandardOutcome {
  enum class Status { optimal, unbounded, infeasible } status = Status::infeasible;
  RatVec solution;
  RatVec ray;
};

// Dense simplex tableau. The last column holds the right-hand side; the
// objective row stores reduced costs and, in its last entry, minus the
// current objective value.
class Tableau {
 public:
  Tableau(RatMat rows, std::vector<std::size_t> basis) : t_(std::move(rows)), basis_(std::move(basis)) {}

  [[nodiscard]] std::size_t row_count() const { return t_.rows(); }
  [[nodiscard]] std::size_t rhs_col() const { return t_.cols() - 1; }
  [[nodiscard]] const RatMat& table() const { return t_; }
  [[nodiscard]] const std::vector<std::size_t>& basis() const { return basis_; }
  [[nodiscard]] Rat objective() const { return -objective_[rhs_col()]; }

  void set_costs(std::span<const Rat> cost) {
    objective_ = zeros(t_.cols());
    for (std::size_t j = 0; j < cost.size(); ++j) objective_[j] = cost[j];
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      const Rat& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) objective_[j] -= cb * t_(i, j);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rat inv = 1 / t_(r, c);
    for (std::size_t j = 0; j < t_.cols(); ++j) {
      if (sgn(t_(r, j)) != 0) t_(r, j) *= inv;
    }
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == r || sgn(t_(i, c)) == 0) continue;
      const Rat factor = t_(i, c);
      for (std::size_t j = 0; j < t_.cols(); ++j) {
        if (sgn(t_(r, j)) != 0) t_(i, j) -= factor * t_(r, j);
      }
    }
    if (sgn(objective_[c]) != 0) {
      const Rat factor = objective_[c];
      for (std::size_t j = 0; j < t_.cols(); ++j) {
        if (sgn(t_(r, j)) != 0) objective_[j] -= factor * t_(r, j);
      }
    }
    basis_[r] = c;
  }

  // Bland's rule over columns [0, column_limit). Returns the entering column
  // of an unbounded ray, or nothing when optimal.
  std::optional<std::size_t> run(std::size_t column_limit) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < column_limit; ++j) {
        if (sgn(objective_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return std::nullopt;
      std::optional<std::size_t> leaving;
      Rat best_ratio;
      for (std::size_t i = 0; i < t_.rows(); ++i) {
        if (sgn(t_(i, *entering)) <= 0) continue;
        Rat ratio = t_(i, rhs_col()) / t_(i, *entering);
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return entering;
      pivot(*leaving, *entering);
    }
  }

  void drop_rows_and_columns(const std::vector<bool>& keep_row, std::size_t keep_cols) {
    RatMat next(0, keep_cols + 1);
    std::vector<std::size_t> next_basis;
    RatVec buffer(keep_cols + 1);
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (!keep_row[i]) continue;
      for (std::size_t j = 0; j < keep_cols; ++j) buffer[j] = t_(i, j);
      buffer[keep_cols] = t_(i, rhs_col());
      next.append_row(buffer);
      next_basis.push_back(basis_[i]);
    }
    t_ = std::move(next);
    basis_ = std::move(next_basis);
  }

 private:
  RatMat t_;
  std::vector<std::size_t> basis_;
  RatVec objective_;
};

StandardOutcome solve_standard(const RatMat& E, const RatVec& f, const RatVec& cost) {
  const std::size_t m = E.rows();
  const std::size_t vars = E.cols();

  // Phase 1: artificial identity on rows normalised to f >= 0.
  RatMat rows(m, vars + m + 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(f[i]) < 0;
    for (std::size_t j = 0; j < vars; ++j) rows(i, j) = flip ? Rat(-E(i, j)) : E(i, j);
    rows(i, vars + i) = 1;
    rows(i, vars + m) = flip ? Rat(-f[i]) : f[i];
    basis[i] = vars + i;
  }
  Tableau tab(std::move(rows), std::move(basis));
  RatVec phase1_cost = zeros(vars + m);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[vars + i] = 1;
  tab.set_costs(phase1_cost);
  tab.run(vars + m);

  StandardOutcome out;
  if (sgn(tab.objective()) > 0) {
    out.status = StandardOutcome::Status::infeasible;
    return out;
  }

  // Drive remaining (zero-valued) artificials out; rows where that is
  // impossible are redundant.
  std::vector<bool> keep(tab.row_count(), true);
  for (std::size_t i = 0; i < tab.row_count(); ++i) {
    if (tab.basis()[i] < vars) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < vars; ++j) {
      if (sgn(tab.table()(i, j)) != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      tab.pivot(i, *col);
    } else {
      keep[i] = false;
    }
  }
  tab.drop_rows_and_columns(keep, vars);

  tab.set_costs(cost);
  const auto unbounded_col = tab.run(vars);
  const auto& t = tab.table();
  if (unbounded_col) {
    out.status = StandardOutcome::Status::unbounded;
    out.ray = zeros(vars);
    out.ray[*unbounded_col] = 1;
    for (std::size_t i = 0; i < tab.row_count(); ++i) out.ray[tab.basis()[i]] = -t(i, *unbounded_col);
    return out;
  }
  out.status = StandardOutcome::Status::optimal;
  out.solution = zeros(vars);
  for (std::size_t i = 0; i < tab.row_count(); ++i) out.solution[tab.basis()[i]] = t(i, tab.rhs_col());
  return out;
}

}  // namespace

LpOutcome solve_lp(const Polyhedron& P, std::span<const Rat> c) {
  if (!P.is_pointed()) throw std::invalid_argument("solve_lp: polyhedron is not pointed");
  const std::size_t n = P.dim();
  const std::size_t mA = P.equality_count();
  const std::size_t mB = P.inequality_count();
  if (c.size() != n) throw std::invalid_argument("solve_lp: objective has " + std::to_string(c.size()) + " entries, expected " + std::to_string(n));

  // [A 0 | b; B I | d] over (x, s). Pivot every free x into the basis; the
  // remaining rows constrain the slacks alone, and x is an affine function
  // of the slacks. Pointedness makes that map injective, so basic solutions
  // of the slack problem are vertices of P.
  const std::size_t cols = n + mB + 1;
  RatMat t(mA + mB, cols);
  for (std::size_t i = 0; i < mA; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = P.A()(i, j);
    t(i, cols - 1) = P.b()[i];
  }
  for (std::size_t k = 0; k < mB; ++k) {
    for (std::size_t j = 0; j < n; ++j) t(mA + k, j) = P.B()(k, j);
    t(mA + k, n + k) = 1;
    t(mA + k, cols - 1) = P.d()[k];
  }

  std::vector<bool> used(t.rows(), false);
  std::vector<std::size_t> x_row(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t r = 0;
    while (r < t.rows() && (used[r] || sgn(t(r, j)) == 0)) ++r;
    if (r == t.rows()) throw std::logic_error("solve_lp: pointed polyhedron without a full column pivot");
    used[r] = true;
    x_row[j] = r;
    const Rat inv = 1 / t(r, j);
    for (std::size_t q = 0; q < cols; ++q) {
      if (sgn(t(r, q)) != 0) t(r, q) *= inv;
    }
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (i == r || sgn(t(i, j)) == 0) continue;
      const Rat factor = t(i, j);
      for (std::size_t q = 0; q < cols; ++q) {
        if (sgn(t(r, q)) != 0) t(i, q) -= factor * t(r, q);
      }
    }
  }

  RatMat E(0, mB);
  RatVec f;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (used[i]) continue;
    auto slack_part = t.row(i).subspan(n, mB);
    if (is_zero(slack_part)) {
      if (sgn(t(i, cols - 1)) != 0) return LpInfeasible{};
      continue;
    }
    E.append_row(slack_part);
    f.push_back(t(i, cols - 1));
  }

  // c^T x = const - sum_k (sum_j c_j T[x_row j][n+k]) s_k
  RatVec slack_cost = zeros(mB);
  for (std::size_t k = 0; k < mB; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(c[j]) != 0) slack_cost[k] -= c[j] * t(x_row[j], n + k);
    }
  }

  auto x_of_slacks = [&](const RatVec& s, bool homogeneous) {
    RatVec x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = homogeneous ? Rat(0) : t(x_row[j], cols - 1);
      for (std::size_t k = 0; k < mB; ++k) {
        if (sgn(s[k]) != 0) x[j] -= t(x_row[j], n + k) * s[k];
      }
    }
    return x;
  };

  const auto standard = solve_standard(E, f, slack_cost);
  switch (standard.status) {
    case StandardOutcome::Status::infeasible:
      return LpInfeasible{};
    case StandardOutcome::Status::unbounded:
      return LpUnbounded{x_of_slacks(standard.ray, true)};
    case StandardOutcome::Status::optimal:
      break;
  }
  RatVec x = x_of_slacks(standard.solution, false);
  Rat value = dot(c, x);
  return LpOptimal{std::move(x), std::move(value)};
}

namespace {

UniquenessReport unique_at(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> xstar, const Rat& value) {

  // A non-vertex optimum moves along any direction of its active null
  // space without changing the objective.
  const auto active = P.active_rows(xstar);
  const auto free_directions = kernel_basis(P.A().stacked(P.B().select_rows(active)));
  if (!free_directions.empty()) {
    const RatVec& d = free_directions.front();
    const StepLength beta = max_step(P, xstar, d);
    const Rat length = beta.is_unbounded() || beta.value() > 1 ? Rat(1) : beta.value();
    return {false, add(xstar, scaled(d, length))};
  }

  // At a vertex every other point of the optimal face leaves some active
  // row, so xstar is unique iff the active rows' slack cannot be made
  // positive on the face: min w^T x = w^T xstar with w the sum of those rows.
  RatMat A = P.A();
  A.append_row(c);
  RatVec b = P.b();
  b.push_back(value);
  const Polyhedron face(std::move(A), std::move(b), P.B(), P.d());
  RatVec w = zeros(P.dim());
  for (auto j : active) w = add(w, P.B().row(j));
  const auto slack = solve_lp(face, w);
  if (const auto* ray = std::get_if<LpUnbounded>(&slack)) return {false, add(xstar, ray->direction)};
  const auto& found = std::get<LpOptimal>(slack);
  if (found.value != dot(w, xstar)) return {false, found.vertex};
  return {true, std::nullopt};
}

}  // namespace

UniquenessReport verify_unique(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> xstar) {
  if (!P.is_feasible(xstar)) throw std::invalid_argument("verify_unique: candidate optimum is infeasible");
  const auto outcome = solve_lp(P, c);
  const auto* opt = std::get_if<LpOptimal>(&outcome);
  const Rat value = dot(c, xstar);
  if (opt == nullptr || opt->value != value) throw std::invalid_argument("verify_unique: candidate is not optimal");
  return unique_at(P, c, xstar, value);
}

UniquenessReport verify_unique(const Polyhedron& P, std::span<const Rat> c, const LpOptimal& optimum) {
  return unique_at(P, c, optimum.vertex, optimum.value);
}

}  // namespace ddsteps
