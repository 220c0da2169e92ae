#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddsteps/polyhedron.hpp"

namespace ddsteps {

/// A circuit of (A, B): g in ker(A) \ {0} with coprime integer entries and
/// support-minimal B g. `g` may carry either orientation; enumeration
/// returns the canonical one (first nonzero entry of B g positive), while
/// steps and conformal terms carry the orientation they move in.
struct Circuit {
  RatVec g;
  std::vector<int> b_signs;  // sign pattern of B g

  friend bool operator==(const Circuit& lhs, const Circuit& rhs) { return lhs.g == rhs.g; }
};

/// Builds a Circuit from any positive multiple of a circuit direction,
/// preserving orientation. Does not check support-minimality.
Circuit make_circuit(const Polyhedron& P, std::span<const Rat> direction);

/// The canonical representative of the +/- pair.
Circuit canonical(const Polyhedron& P, const Circuit& circuit);

/// Lexicographic order of the canonical representatives.
bool canonical_less(const Polyhedron& P, const Circuit& lhs, const Circuit& rhs);

/// Point of C_{A,B} = {(x, y+, y-) : Ax = 0, Bx = y+ - y-, y+, y- >= 0}.
struct ConeLift {
  RatVec x;
  RatVec yplus;
  RatVec yminus;

  [[nodiscard]] bool is_zero() const;
  friend bool operator==(const ConeLift&, const ConeLift&) = default;
};

/// Canonical lift y+ = max(Bv, 0), y- = max(-Bv, 0). Throws
/// std::invalid_argument when A v != 0.
ConeLift lift(const Polyhedron& P, std::span<const Rat> v);

/// Rank test on the constraints of C_{A,B} active at `point`: extreme iff
/// that rank is n + 2 m_B - 1. Throws std::invalid_argument for the zero
/// vector or a point outside the cone.
bool is_extreme_ray(const Polyhedron& P, const ConeLift& point);

/// False for v = 0 or A v != 0, otherwise is_extreme_ray(lift(v)).
bool is_circuit_direction(const Polyhedron& P, std::span<const Rat> v);

/// Thrown when an exponential enumeration would exceed its work budget.
class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(const std::string& what, std::size_t requested, std::size_t budget)
      : std::runtime_error(what), requested_(requested), budget_(budget) {}
  [[nodiscard]] std::size_t requested() const noexcept { return requested_; }
  [[nodiscard]] std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

struct WorkBudget {
  /// Maximum number of candidate row subsets examined by enumeration.
  std::size_t max_subsets = 2'000'000;

  /// Default budget, overridden by DDSTEPS_WORK_BUDGET when set.
  static WorkBudget from_environment();
};

/// Every circuit of (A, B), one per +/- pair, canonically signed and in
/// ascending lexicographic order. Exponential in the worst case; throws
/// SizeGuardError beyond the budget.
std::vector<Circuit> enumerate_circuits(const Polyhedron& P, const WorkBudget& budget = WorkBudget::from_environment());

}  // namespace ddsteps
