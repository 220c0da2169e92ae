#pragma once

// Small instances shared by the unit tests.

#include <initializer_list>

#include "ddsteps/polyhedron.hpp"
#include "ddsteps/reductions.hpp"

namespace ddsteps::testing {

inline RatVec vec(std::initializer_list<Rat> values) { return RatVec(values); }

/// {0 <= x <= 1} in R^2; B rows: x1 <= 1, x2 <= 1, -x1 <= 0, -x2 <= 0.
inline Polyhedron unit_square() { return make_box(vec({0, 0}), vec({1, 1})); }

/// Arcs (1,2), (2,3), (3,1).
inline Digraph triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

/// Triangles on nodes 1-3 and 4-6.
inline Digraph two_triangles() { return Digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}); }

/// Circulation polytope {x : A x = 0, 0 <= x <= 1} of G, no perturbation.
inline Polyhedron circulation_polytope(const Digraph& G) {
  const std::size_t m = G.arc_count();
  RatVec d(m, Rat(1));
  d.resize(2 * m, Rat(0));
  return Polyhedron(incidence_matrix(G), zeros(G.node_count()), RatMat::identity(m).stacked(RatMat::identity(m).negated()), d);
}

}  // namespace ddsteps::testing
