#include "ddsteps/ddstep.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "ddsteps/conformal.hpp"

namespace ddsteps {

namespace {

void require_feasible(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0) {
  if (c.size() != P.dim()) throw std::invalid_argument("objective dimension does not match the polyhedron");
  if (!P.is_feasible(x0)) throw std::invalid_argument("start point is not feasible");
}

// Orientation of a canonical circuit that improves c, if any.
std::optional<Circuit> improving_orientation(const Polyhedron& P, const Circuit& circuit, std::span<const Rat> c) {
  const int s = sign(dot(c, circuit.g));
  if (s == 0) return std::nullopt;
  if (s < 0) return circuit;
  return make_circuit(P, scaled(circuit.g, Rat(-1)));
}

// Scans circuits in canonical order and keeps the strictly best score.
template <typename Score>
StepOutcome best_circuit_step(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0, const WorkBudget& budget, Score score) {
  require_feasible(P, c, x0);
  std::optional<DdStep> best;
  std::optional<Rat> best_score;
  for (const auto& circuit : enumerate_circuits(P, budget)) {
    auto oriented = improving_orientation(P, circuit, c);
    if (!oriented) continue;
    const auto length = max_step(P, x0, oriented->g);
    if (length.is_unbounded()) return UnboundedImprovement{std::move(*oriented)};
    if (sgn(length.value()) == 0) continue;
    Rat improvement = -dot(c, oriented->g) * length.value();
    Rat value = score(*oriented, improvement);
    if (!best_score || value > *best_score) {
      best_score = std::move(value);
      best = DdStep{std::move(*oriented), length.value(), std::move(improvement)};
    }
  }
  if (!best) return AtOptimum{};
  return *best;
}

}  // namespace

StepOutcome exact_dd_step(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0, const WorkBudget& budget) {
  return best_circuit_step(P, c, x0, budget, [](const Circuit&, const Rat& improvement) { return improvement; });
}

StepOutcome steepest_descent_step(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0, const WorkBudget& budget) {
  return best_circuit_step(P, c, x0, budget, [&](const Circuit& circuit, const Rat&) {
    return Rat(-dot(c, circuit.g) / l1_norm(circuit.g));
  });
}

StepOutcome approx_dd_step(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0) {
  require_feasible(P, c, x0);
  const auto outcome = solve_lp(P, c);
  if (const auto* ray = std::get_if<LpUnbounded>(&outcome)) return LpUnboundedOutcome{ray->direction};
  const auto& optimum = std::get<LpOptimal>(outcome);
  if (optimum.value == dot(c, x0)) return AtOptimum{};

  const auto sum = decompose(P, subtract(optimum.vertex, x0));
  const ConformalTerm* chosen = nullptr;
  Rat chosen_value;
  for (const auto& term : sum.terms) {
    Rat value = dot(c, term.circuit.g) * term.alpha;
    if (chosen == nullptr || value < chosen_value) {
      chosen = &term;
      chosen_value = std::move(value);
    }
  }
  const auto length = max_step(P, x0, chosen->circuit.g);
  if (length.is_unbounded()) return UnboundedImprovement{chosen->circuit};
  Rat improvement = -dot(c, chosen->circuit.g) * length.value();
  return DdStep{chosen->circuit, length.value(), std::move(improvement)};
}

std::string to_string(StepRule rule) {
  switch (rule) {
    case StepRule::exact:
      return "exact";
    case StepRule::approx:
      return "approx";
    case StepRule::steepest:
      return "steepest";
  }
  return "unknown";
}

AugmentationTrace augment(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0, StepRule rule, std::size_t max_iterations,
                          const WorkBudget& budget) {
  require_feasible(P, c, x0);
  AugmentationTrace trace;
  trace.rule = rule;
  trace.approximation_factor = rule == StepRule::approx ? P.dim() - P.rank_A() : 1;
  trace.iterates.emplace_back(x0.begin(), x0.end());
  for (;;) {
    const Point& current = trace.iterates.back();
    StepOutcome outcome;
    switch (rule) {
      case StepRule::exact:
        outcome = exact_dd_step(P, c, current, budget);
        break;
      case StepRule::approx:
        outcome = approx_dd_step(P, c, current);
        break;
      case StepRule::steepest:
        outcome = steepest_descent_step(P, c, current, budget);
        break;
    }
    if (std::holds_alternative<AtOptimum>(outcome)) {
      trace.status = TraceStatus::converged;
      return trace;
    }
    if (!std::holds_alternative<DdStep>(outcome)) {
      trace.status = TraceStatus::unbounded;
      return trace;
    }
    if (trace.steps.size() == max_iterations) {
      trace.status = TraceStatus::iteration_cap;
      return trace;
    }
    auto step = std::get<DdStep>(std::move(outcome));
    Point next = add(current, scaled(step.circuit.g, step.alpha));
    trace.steps.push_back(std::move(step));
    trace.iterates.push_back(std::move(next));
  }
}

}  // namespace ddsteps
