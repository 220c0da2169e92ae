#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <variant>

#include "ddsteps/lp.hpp"

namespace ddsteps {

struct AlreadyOptimal {};
struct CircuitNeighbor {
  Point xstar;
};
struct NotCircuitNeighbor {
  Point xstar;
};
struct NotUnique {
  Point xstar;
  UniquenessReport report;
};

using OcnpVerdict = std::variant<CircuitNeighbor, NotCircuitNeighbor, AlreadyOptimal, NotUnique>;

/// The LP behind an OCNP query has no optimum to compare against.
class LpNotSolvableError : public std::runtime_error {
 public:
  enum class Reason { unbounded, infeasible };
  LpNotSolvableError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  [[nodiscard]] Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Optimal circuit-neighbour decision for LPs whose optimum is verified to
/// be unique. Multiple optima yield NotUnique instead of an answer.
/// Throws LpNotSolvableError for unbounded LPs and std::invalid_argument
/// for an infeasible start point.
OcnpVerdict decide_ocnp(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0);

}  // namespace ddsteps
