#pragma once

#include <span>
#include <vector>

#include "ddsteps/circuits.hpp"

namespace ddsteps {

struct ConformalTerm {
  Rat alpha;  // > 0
  Circuit circuit;
};

/// target = sum alpha_i g_i with every g_i a circuit sign-compatible with
/// target on the B-image.
struct ConformalSum {
  std::vector<ConformalTerm> terms;
  RatVec target;
};

/// Conformal decomposition of z in ker(A) \ {0} into at most n - rank(A)
/// circuits. Each round picks a vertex of the slice of the current
/// residual's face normalised on its first nonzero B-coordinate (found by
/// the exact simplex), then subtracts the largest multiple that keeps the
/// residual conformal. Terms are ordered by canonical circuit order.
///
/// Throws std::invalid_argument when z = 0 or A z != 0.
ConformalSum decompose(const Polyhedron& P, std::span<const Rat> z);

/// Exact reconstruction, positive alphas, sign-compatibility, term count
/// at most n - rank(A), and a circuit test on every term.
bool verify_conformal(const Polyhedron& P, const ConformalSum& sum);

}  // namespace ddsteps
