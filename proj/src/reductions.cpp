#include "ddsteps/reductions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ddsteps/ddstep.hpp"
#include "ddsteps/lp.hpp"

namespace ddsteps {

Digraph::Digraph(std::size_t nodes, std::vector<Arc> arcs, std::optional<RatVec> costs)
    : nodes_(nodes), arcs_(std::move(arcs)), costs_(std::move(costs)) {
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto& arc = arcs_[i];
    if (arc.tail >= nodes_ || arc.head >= nodes_) {
      throw std::invalid_argument("digraph: arc " + std::to_string(i + 1) + " has an endpoint outside 1.." + std::to_string(nodes_));
    }
    if (arc.tail == arc.head) throw std::invalid_argument("digraph: arc " + std::to_string(i + 1) + " is a self-loop");
  }
  if (costs_ && costs_->size() != arcs_.size()) throw std::invalid_argument("digraph: cost vector size differs from arc count");
}

RatVec Digraph::effective_costs() const { return costs_ ? *costs_ : RatVec(arcs_.size(), Rat(1)); }

bool Digraph::has_unit_costs() const {
  return !costs_ || std::all_of(costs_->begin(), costs_->end(), [](const Rat& c) { return c == 1; });
}

Digraph perturb_costs(const Digraph& G) {
  if (!G.has_unit_costs()) throw std::invalid_argument("perturb_costs: graph already carries non-unit costs");
  RatVec costs;
  costs.reserve(G.arc_count());
  for (std::size_t i = 1; i <= G.arc_count(); ++i) {
    mpz_class power = 1;
    power <<= static_cast<mp_bitcnt_t>(i);
    costs.emplace_back(1 + Rat(mpz_class(1), power));
  }
  return Digraph(G.node_count(), G.arcs(), std::move(costs));
}

RatMat incidence_matrix(const Digraph& G) {
  RatMat A(G.node_count(), G.arc_count());
  for (std::size_t e = 0; e < G.arc_count(); ++e) {
    A(G.arcs()[e].tail, e) = 1;
    A(G.arcs()[e].head, e) = -1;
  }
  return A;
}

ReductionInstance build_reduction(const Digraph& G) {
  Digraph source = G.has_unit_costs() ? perturb_costs(G) : G;
  const std::size_t m = source.arc_count();
  RatMat B = RatMat::identity(m).stacked(RatMat::identity(m).negated());
  RatVec d(m, Rat(1));
  d.resize(2 * m, Rat(0));
  Polyhedron polyhedron(incidence_matrix(source), zeros(source.node_count()), std::move(B), std::move(d));
  RatVec objective = scaled(*source.costs(), Rat(-1));

  const auto outcome = solve_lp(polyhedron, objective);
  const auto& optimum = std::get<LpOptimal>(outcome);
  if (!verify_unique(polyhedron, objective, optimum).unique) {
    throw std::invalid_argument("build_reduction: arc costs do not give the circulation LP a unique optimum");
  }
  std::vector<std::size_t> arc_index(m);
  for (std::size_t e = 0; e < m; ++e) arc_index[e] = e;
  Point optimum_vertex = optimum.vertex;
  return ReductionInstance{std::move(polyhedron), std::move(objective), zeros(m), std::move(source), std::move(arc_index),
                           std::move(optimum_vertex)};
}

std::vector<Cycle> simple_cycles(const Digraph& G, std::size_t max_nodes) {
  if (G.node_count() > max_nodes) {
    throw std::invalid_argument("simple_cycles: " + std::to_string(G.node_count()) + " nodes exceed the oracle limit of " + std::to_string(max_nodes));
  }
  const RatVec costs = G.effective_costs();
  std::vector<std::vector<std::size_t>> out_arcs(G.node_count());
  for (std::size_t e = 0; e < G.arc_count(); ++e) out_arcs[G.arcs()[e].tail].push_back(e);

  // Each cycle is found once, from its smallest node, visiting only larger
  // nodes in between.
  std::vector<Cycle> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(G.node_count(), false);
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t node) {
    for (auto e : out_arcs[node]) {
      const std::size_t next = G.arcs()[e].head;
      if (next == start) {
        Cycle cycle;
        cycle.arcs = path;
        cycle.arcs.push_back(e);
        std::sort(cycle.arcs.begin(), cycle.arcs.end());
        cycle.cost = 0;
        for (auto a : cycle.arcs) cycle.cost += costs[a];
        cycles.push_back(std::move(cycle));
      } else if (next > start && !on_path[next]) {
        on_path[next] = true;
        path.push_back(e);
        extend(start, next);
        path.pop_back();
        on_path[next] = false;
      }
    }
  };
  for (std::size_t start = 0; start < G.node_count(); ++start) {
    on_path[start] = true;
    extend(start, start);
    on_path[start] = false;
  }
  return cycles;
}

std::optional<Cycle> longest_cycle_oracle(const Digraph& G, std::size_t max_nodes) {
  std::optional<Cycle> best;
  for (auto& cycle : simple_cycles(G, max_nodes)) {
    if (!best || cycle.cost > best->cost || (cycle.cost == best->cost && cycle.arcs < best->arcs)) best = std::move(cycle);
  }
  return best;
}

bool verify_correspondence(const Digraph& G) {
  const auto instance = build_reduction(G);
  const auto outcome = exact_dd_step(instance.polyhedron, instance.objective, instance.x0);
  const auto longest = longest_cycle_oracle(instance.source);
  if (!longest) return std::holds_alternative<AtOptimum>(outcome);
  const auto* step = std::get_if<DdStep>(&outcome);
  if (step == nullptr || step->alpha != 1 || step->improvement != longest->cost) return false;
  RatVec indicator = zeros(G.arc_count());
  for (auto e : longest->arcs) indicator[instance.arc_index[e]] = 1;
  return step->circuit.g == indicator;
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t nodes, std::size_t max_arcs) {
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < nodes; ++u) {
    for (std::size_t v = 0; v < nodes; ++v) {
      if (u != v && (rng() >> 63) != 0) arcs.push_back({u, v});
    }
  }
  // Fisher-Yates with explicit index arithmetic so the result does not
  // depend on the standard library's distribution implementations.
  for (std::size_t i = arcs.size(); i > 1; --i) std::swap(arcs[i - 1], arcs[rng() % i]);
  if (arcs.size() > max_arcs) arcs.resize(max_arcs);
  return Digraph(nodes, std::move(arcs));
}

}  // namespace ddsteps
