#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ddsteps/circuits.hpp"
#include "ddsteps/lp.hpp"

namespace ddsteps {

/// A maximal feasible circuit step x0 -> x0 + alpha g with c^T g < 0.
struct DdStep {
  Circuit circuit;  // oriented along the step
  Rat alpha;
  Rat improvement;  // -c^T (alpha g)
};

/// No feasible improving circuit exists: x0 is optimal.
struct AtOptimum {};

/// Some improving circuit can be followed forever.
struct UnboundedImprovement {
  Circuit circuit;
};

/// The LP itself is unbounded (reported by the LP-based rules).
struct LpUnboundedOutcome {
  RatVec direction;
};

using StepOutcome = std::variant<DdStep, AtOptimum, UnboundedImprovement, LpUnboundedOutcome>;

/// Deepest-descent step by scanning every circuit in canonical order; the
/// first maximiser wins ties. Exponential; shares the enumeration budget.
StepOutcome exact_dd_step(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0,
                          const WorkBudget& budget = WorkBudget::from_environment());

/// (n - rank A)-approximate dd-step: solve the LP, decompose x* - x0
/// conformally, take the term with the smallest c^T(alpha_i g_i) and extend
/// it to its maximal feasible length. Never enumerates circuits.
StepOutcome approx_dd_step(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0);

/// Circuit minimising c^T g / |g|_1 taken at maximal length.
StepOutcome steepest_descent_step(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0,
                                  const WorkBudget& budget = WorkBudget::from_environment());

enum class StepRule { exact, approx, steepest };

std::string to_string(StepRule rule);

enum class TraceStatus { converged, unbounded, iteration_cap };

struct AugmentationTrace {
  StepRule rule = StepRule::exact;
  /// For the approx rule the guaranteed ratio n - rank(A).
  std::size_t approximation_factor = 1;
  std::vector<DdStep> steps;
  std::vector<Point> iterates;  // iterates.front() == x0
  TraceStatus status = TraceStatus::converged;
};

/// Repeats the selected step rule from x0 until it reports optimality, an
/// unbounded outcome, or `max_iterations` steps have been taken.
AugmentationTrace augment(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0, StepRule rule,
                          std::size_t max_iterations = 10'000, const WorkBudget& budget = WorkBudget::from_environment());

}  // namespace ddsteps
