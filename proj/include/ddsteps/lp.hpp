#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <variant>

#include "ddsteps/polyhedron.hpp"

namespace ddsteps {

struct LpOptimal {
  Point vertex;
  Rat value;
};

/// A ray r with A r = 0, B r <= 0 and c^T r < 0.
struct LpUnbounded {
  RatVec direction;
};

struct LpInfeasible {};

using LpOutcome = std::variant<LpOptimal, LpUnbounded, LpInfeasible>;

/// min c^T x over P. Primal simplex on the slack form with Bland's
/// smallest-index rule in both phases, all arithmetic exact. An optimal
/// outcome is always a vertex of P.
///
/// Throws std::invalid_argument when P is not pointed or c has the wrong
/// dimension.
LpOutcome solve_lp(const Polyhedron& P, std::span<const Rat> c);

struct UniquenessReport {
  bool unique = true;
  /// Feasible, optimal, and different from the examined optimum when
  /// unique is false.
  std::optional<Point> witness;
};

/// Decides whether xstar is the only optimum. A vertex is unique iff the
/// summed slack of its active rows stays zero over the optimal face (one
/// auxiliary LP); a non-vertex optimum never is. Throws
/// std::invalid_argument when xstar is infeasible or not optimal.
UniquenessReport verify_unique(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> xstar);

/// Same decision for an optimum just returned by solve_lp(P, c), without
/// re-establishing its optimality.
UniquenessReport verify_unique(const Polyhedron& P, std::span<const Rat> c, const LpOptimal& optimum);

}  // namespace ddsteps
