#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ddsteps/ddstep.hpp"
#include "ddsteps/reductions.hpp"
#include "fixtures.hpp"

using namespace ddsteps;
using ddsteps::testing::vec;

TEST_CASE("digraph validation") {
  CHECK_THROWS_AS(Digraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(2, {{0, 1}}, vec({1, 2})), std::invalid_argument);
  const Digraph parallel(2, {{0, 1}, {0, 1}});
  CHECK(parallel.arc_count() == 2);
  CHECK(parallel.has_unit_costs());
  CHECK(Digraph(2, {{0, 1}}, vec({1})).has_unit_costs());
  CHECK_FALSE(Digraph(2, {{0, 1}}, vec({2})).has_unit_costs());
}

TEST_CASE("perturbation") {
  CHECK(*perturb_costs(ddsteps::testing::triangle()).costs() == vec({Rat(3, 2), Rat(5, 4), Rat(9, 8)}));
  CHECK(*perturb_costs(Digraph(2, {{0, 1}})).costs() == vec({Rat(3, 2)}));
  CHECK_THROWS_AS((void)perturb_costs(Digraph(2, {{0, 1}}, vec({2}))), std::invalid_argument);

  const Digraph two_digons(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  const auto cycles = simple_cycles(perturb_costs(two_digons));
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].arcs == std::vector<std::size_t>{0, 1});
  CHECK(cycles[0].cost == Rat(2) + Rat(3, 4));
  CHECK(cycles[1].arcs == std::vector<std::size_t>{2, 3});
  CHECK(cycles[1].cost == Rat(2) + Rat(3, 16));
}

TEST_CASE("incidence matrix convention") {
  const auto A = incidence_matrix(ddsteps::testing::triangle());
  CHECK(A == RatMat::from_rows({vec({1, 0, -1}), vec({-1, 1, 0}), vec({0, -1, 1})}, 3));
}

TEST_CASE("triangle reduction") {
  const auto inst = build_reduction(ddsteps::testing::triangle());
  CHECK(inst.polyhedron == ddsteps::testing::circulation_polytope(ddsteps::testing::triangle()));
  CHECK(inst.objective == vec({Rat(-3, 2), Rat(-5, 4), Rat(-9, 8)}));
  CHECK(inst.x0 == zeros(3));
  CHECK(inst.optimum == vec({1, 1, 1}));
  CHECK(inst.arc_index == std::vector<std::size_t>{0, 1, 2});
  CHECK(verify_correspondence(ddsteps::testing::triangle()));
}

TEST_CASE("acyclic reduction") {
  const Digraph arc(2, {{0, 1}});
  const auto inst = build_reduction(arc);
  CHECK(inst.optimum == vec({0}));
  CHECK(std::holds_alternative<AtOptimum>(exact_dd_step(inst.polyhedron, inst.objective, inst.x0)));
  CHECK_FALSE(longest_cycle_oracle(arc));
  CHECK(verify_correspondence(arc));
  CHECK(verify_correspondence(Digraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})));
}

TEST_CASE("two triangles reduction") {
  const auto inst = build_reduction(ddsteps::testing::two_triangles());
  const auto out = exact_dd_step(inst.polyhedron, inst.objective, inst.x0);
  REQUIRE(std::holds_alternative<DdStep>(out));
  CHECK(std::get<DdStep>(out).circuit.g == vec({1, 1, 1, 0, 0, 0}));
  CHECK(verify_correspondence(ddsteps::testing::two_triangles()));
}

TEST_CASE("weighted graphs keep their costs") {
  const Digraph G(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}, vec({5, 1, 2, 2}));
  const auto inst = build_reduction(G);
  CHECK(inst.objective == vec({-5, -1, -2, -2}));
  // both digons share node 2 but still add up to a circulation
  CHECK(inst.optimum == vec({1, 1, 1, 1}));
  CHECK(verify_correspondence(G));
  // a zero-cost digon ties with the empty circulation
  CHECK_THROWS_AS((void)build_reduction(Digraph(2, {{0, 1}, {1, 0}}, vec({1, -1}))), std::invalid_argument);
}

TEST_CASE("complete digraph on three nodes") {
  const Digraph K3(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {2, 1}, {0, 2}});
  const Digraph perturbed = perturb_costs(K3);
  const auto cycles = simple_cycles(perturbed);
  CHECK(cycles.size() == 5);
  std::set<Rat> costs;
  for (const auto& cycle : cycles) costs.insert(cycle.cost);
  CHECK(costs.size() == 5);
  const auto longest = longest_cycle_oracle(perturbed);
  REQUIRE(longest);
  CHECK(longest->arcs == std::vector<std::size_t>{0, 1, 2});
  CHECK(longest->cost == Rat(31, 8));
  CHECK(verify_correspondence(K3));
}

TEST_CASE("cycle enumeration") {
  // three parallel-free cycles through node 0
  const Digraph G(4, {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 3}, {3, 0}});
  const auto cycles = simple_cycles(G);
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& c : cycles) sets.push_back(c.arcs);
  std::sort(sets.begin(), sets.end());
  CHECK(sets == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2, 3}, {0, 2, 4, 5}});
  CHECK_THROWS_AS((void)simple_cycles(Digraph(11, {}), 10), std::invalid_argument);
  // parallel arcs form distinct 2-cycles with a back arc
  CHECK(simple_cycles(Digraph(2, {{0, 1}, {0, 1}, {1, 0}})).size() == 2);
}

TEST_CASE("random digraphs are reproducible") {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int i = 0; i < 20; ++i) {
    const auto G = random_digraph(a, 5, 8);
    CHECK(G == random_digraph(b, 5, 8));
    CHECK(G.arc_count() <= 8);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& arc : G.arcs()) {
      CHECK(arc.tail != arc.head);
      CHECK(seen.insert({arc.tail, arc.head}).second);
    }
  }
}

TEST_CASE("reduction properties on random digraphs") {
  std::mt19937_64 rng(99991);
  for (int trial = 0; trial < 60; ++trial) {
    const auto nodes = static_cast<std::size_t>(2 + rng() % 4);
    const Digraph G = random_digraph(rng, nodes, 8);
    const Digraph perturbed = perturb_costs(G);
    const mpz_class two_m = mpz_class(1) << static_cast<mp_bitcnt_t>(G.arc_count());
    for (const auto& cost : *perturbed.costs()) CHECK(two_m % cost.get_den() == 0);
    const auto cycles = simple_cycles(perturbed);
    std::set<Rat> costs;
    for (const auto& cycle : cycles) {
      const auto len = static_cast<long>(cycle.arcs.size());
      CHECK(cycle.cost >= len);
      CHECK(cycle.cost < len + 1);
      costs.insert(cycle.cost);
    }
    CHECK(costs.size() == cycles.size());
    CHECK(verify_correspondence(G));
  }
}
