#include "ddsteps/ocnp.hpp"

#include "ddsteps/circuits.hpp"

namespace ddsteps {

OcnpVerdict decide_ocnp(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0) {
  if (!P.is_feasible(x0)) throw std::invalid_argument("decide_ocnp: start point is not feasible");
  const auto outcome = solve_lp(P, c);
  if (std::holds_alternative<LpUnbounded>(outcome)) {
    throw LpNotSolvableError(LpNotSolvableError::Reason::unbounded, "decide_ocnp: LP is unbounded");
  }
  if (std::holds_alternative<LpInfeasible>(outcome)) {
    throw LpNotSolvableError(LpNotSolvableError::Reason::infeasible, "decide_ocnp: LP is infeasible");
  }
  const auto& optimum = std::get<LpOptimal>(outcome);
  const Point& xstar = optimum.vertex;
  auto report = verify_unique(P, c, optimum);
  if (!report.unique) return NotUnique{xstar, std::move(report)};
  const RatVec difference = subtract(xstar, x0);
  if (is_zero(difference)) return AlreadyOptimal{};
  if (is_circuit_direction(P, difference)) return CircuitNeighbor{xstar};
  return NotCircuitNeighbor{xstar};
}

}  // namespace ddsteps
