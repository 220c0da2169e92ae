#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ddsteps/polyhedron.hpp"

namespace ddsteps {

struct Arc {
  std::size_t tail;  // 0-based node ids
  std::size_t head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed graph with arcs indexed by list order. Parallel arcs are allowed,
/// self-loops are not.
class Digraph {
 public:
  /// Throws std::invalid_argument on self-loops, out-of-range endpoints or a
  /// cost vector whose size differs from the arc count.
  Digraph(std::size_t nodes, std::vector<Arc> arcs, std::optional<RatVec> costs = std::nullopt);

  [[nodiscard]] std::size_t node_count() const noexcept { return nodes_; }
  [[nodiscard]] std::size_t arc_count() const noexcept { return arcs_.size(); }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  [[nodiscard]] const std::optional<RatVec>& costs() const noexcept { return costs_; }
  /// Costs, or all ones when the graph is unweighted.
  [[nodiscard]] RatVec effective_costs() const;
  [[nodiscard]] bool has_unit_costs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t nodes_;
  std::vector<Arc> arcs_;
  std::optional<RatVec> costs_;
};

/// Costs 1 + 2^-i for the arc with 1-based index i. Throws
/// std::invalid_argument when the graph carries non-unit costs.
Digraph perturb_costs(const Digraph& G);

/// |V| x m node-arc incidence matrix: +1 at the tail, -1 at the head.
RatMat incidence_matrix(const Digraph& G);

/// Circulation LP  min -c^T x  s.t.  A x = 0, 0 <= x <= 1  with A the
/// incidence matrix, B = [I; -I], d = (1..1, 0..0), started from x0 = 0.
struct ReductionInstance {
  Polyhedron polyhedron;
  RatVec objective;
  Point x0;
  Digraph source;                      // graph carrying the costs used
  std::vector<std::size_t> arc_index;  // LP variable -> arc index
  Point optimum;                       // verified unique
};

/// Unweighted or unit-cost graphs are perturbed first; other costs are used
/// as given. Throws std::invalid_argument if the resulting LP does not have
/// a unique optimum.
ReductionInstance build_reduction(const Digraph& G);

struct Cycle {
  std::vector<std::size_t> arcs;  // ascending arc indices
  Rat cost;
};

/// Every simple directed cycle, each listed once as an arc set. Throws
/// std::invalid_argument when the graph has more than `max_nodes` nodes.
std::vector<Cycle> simple_cycles(const Digraph& G, std::size_t max_nodes = 10);

/// Maximum-cost simple directed cycle by exhaustive enumeration; ties go to
/// the lexicographically smallest arc set. Nothing for acyclic graphs.
std::optional<Cycle> longest_cycle_oracle(const Digraph& G, std::size_t max_nodes = 10);

/// Builds the reduction, takes an exact dd-step from x0 = 0 and checks that
/// it is the 0/1 indicator of the oracle's longest cycle with alpha = 1 and
/// improvement equal to the cycle cost (or that both sides report nothing).
bool verify_correspondence(const Digraph& G);

/// Random loopless digraph without parallel arcs: every ordered pair is
/// included independently with probability 1/2, then the list is shuffled
/// and truncated to `max_arcs`. Depends only on the generator state.
Digraph random_digraph(std::mt19937_64& rng, std::size_t nodes, std::size_t max_arcs);

}  // namespace ddsteps
