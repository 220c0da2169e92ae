#include <optional>
#include <random>

#include "doctest.h"
#include "ddsteps/ddstep.hpp"
#include "fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ddsteps;
using ddsteps::testing::vec;

namespace {

const RatVec kTriangleObjective = {Rat(-3, 2), Rat(-5, 4), Rat(-9, 8)};

// Best improvement over both orientations of every brute-force circuit.
std::optional<Rat> best_improvement(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0) {
  std::optional<Rat> best;
  for (const auto& g : ddsteps::testing::brute_force_circuits(P)) {
    for (const auto& dir : {g, scaled(g, Rat(-1))}) {
      if (sgn(dot(c, dir)) >= 0) continue;
      const auto beta = max_step(P, x0, dir);
      REQUIRE_FALSE(beta.is_unbounded());
      if (sgn(beta.value()) == 0) continue;
      Rat improvement = -dot(c, dir) * beta.value();
      if (!best || improvement > *best) best = improvement;
    }
  }
  return best;
}

void check_step_invariants(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0, const DdStep& step) {
  CHECK(sgn(step.alpha) > 0);
  CHECK(sgn(dot(c, step.circuit.g)) < 0);
  CHECK(step.improvement == -dot(c, step.circuit.g) * step.alpha);
  CHECK(P.is_feasible(add(x0, scaled(step.circuit.g, step.alpha))));
  CHECK(max_step(P, x0, step.circuit.g) == StepLength::bounded(step.alpha));
  CHECK(is_circuit_direction(P, step.circuit.g));
}

}  // namespace

TEST_CASE("exact step on the unit square") {
  const auto square = ddsteps::testing::unit_square();
  const auto out = exact_dd_step(square, vec({-3, -1}), vec({0, 0}));
  const auto* step = std::get_if<DdStep>(&out);
  REQUIRE(step);
  CHECK(step->circuit.g == vec({1, 0}));
  CHECK(step->alpha == 1);
  CHECK(step->improvement == 3);
  CHECK(std::holds_alternative<AtOptimum>(exact_dd_step(square, vec({-1, -1}), vec({1, 1}))));
}

TEST_CASE("exact step follows the circuit orientation") {
  const auto square = ddsteps::testing::unit_square();
  const auto out = exact_dd_step(square, vec({1, 2}), vec({1, 1}));
  const auto* step = std::get_if<DdStep>(&out);
  REQUIRE(step);
  CHECK(step->circuit.g == vec({0, -1}));
  CHECK(step->improvement == 2);
}

TEST_CASE("ties go to the first circuit in canonical order") {
  const auto square = ddsteps::testing::unit_square();
  const auto out = exact_dd_step(square, vec({-1, -1}), vec({0, 0}));
  REQUIRE(std::holds_alternative<DdStep>(out));
  CHECK(std::get<DdStep>(out).circuit.g == vec({0, 1}));
}

TEST_CASE("triangle circulation step") {
  const auto P = ddsteps::testing::circulation_polytope(ddsteps::testing::triangle());
  for (const auto& out : {exact_dd_step(P, kTriangleObjective, zeros(3)), approx_dd_step(P, kTriangleObjective, zeros(3)),
                          steepest_descent_step(P, kTriangleObjective, zeros(3))}) {
    const auto* step = std::get_if<DdStep>(&out);
    REQUIRE(step);
    CHECK(step->circuit.g == vec({1, 1, 1}));
    CHECK(step->alpha == 1);
    CHECK(step->improvement == Rat(31, 8));
  }
}

TEST_CASE("approx and steepest on the unit square") {
  const auto square = ddsteps::testing::unit_square();
  const auto approx = approx_dd_step(square, vec({-3, -1}), vec({0, 0}));
  REQUIRE(std::holds_alternative<DdStep>(approx));
  CHECK(std::get<DdStep>(approx).circuit.g == vec({1, 0}));
  CHECK(std::get<DdStep>(approx).improvement == 3);
  const auto steep = steepest_descent_step(square, vec({-3, -1}), vec({0, 0}));
  REQUIRE(std::holds_alternative<DdStep>(steep));
  CHECK(std::get<DdStep>(steep).circuit.g == vec({1, 0}));
  CHECK(std::holds_alternative<AtOptimum>(approx_dd_step(square, vec({-3, -1}), vec({1, 1}))));
  CHECK(std::holds_alternative<AtOptimum>(steepest_descent_step(square, vec({-3, -1}), vec({1, 1}))));
}

TEST_CASE("steepest and deepest can differ") {
  // box [0,4] x [0,1]: deepest prefers the long edge, steepest the steep one
  const auto box = make_box(vec({0, 0}), vec({4, 1}));
  const auto deep = exact_dd_step(box, vec({-1, -2}), vec({0, 0}));
  const auto steep = steepest_descent_step(box, vec({-1, -2}), vec({0, 0}));
  CHECK(std::get<DdStep>(deep).circuit.g == vec({1, 0}));
  CHECK(std::get<DdStep>(deep).improvement == 4);
  CHECK(std::get<DdStep>(steep).circuit.g == vec({0, 1}));
  CHECK(std::get<DdStep>(steep).improvement == 2);
}

TEST_CASE("unbounded outcomes") {
  // x >= 0 in R^1
  const Polyhedron ray(RatMat(0, 1), {}, RatMat::from_rows({vec({-1})}, 1), vec({0}));
  const auto exact = exact_dd_step(ray, vec({-1}), vec({0}));
  REQUIRE(std::holds_alternative<UnboundedImprovement>(exact));
  CHECK(std::get<UnboundedImprovement>(exact).circuit.g == vec({1}));
  CHECK(std::holds_alternative<LpUnboundedOutcome>(approx_dd_step(ray, vec({-1}), vec({0}))));
  const auto trace = augment(ray, vec({-1}), vec({0}), StepRule::exact);
  CHECK(trace.status == TraceStatus::unbounded);
  CHECK(trace.steps.empty());
}

TEST_CASE("augmentation on the unit square") {
  const auto square = ddsteps::testing::unit_square();
  const auto trace = augment(square, vec({-3, -1}), vec({0, 0}), StepRule::exact);
  CHECK(trace.status == TraceStatus::converged);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.iterates == std::vector<Point>{vec({0, 0}), vec({1, 0}), vec({1, 1})});

  const auto idle = augment(square, vec({-3, -1}), vec({1, 1}), StepRule::exact);
  CHECK(idle.steps.empty());
  CHECK(idle.iterates == std::vector<Point>{vec({1, 1})});

  const auto capped = augment(square, vec({-3, -1}), vec({0, 0}), StepRule::exact, 1);
  CHECK(capped.status == TraceStatus::iteration_cap);
  CHECK(capped.steps.size() == 1);

  const auto approx = augment(square, vec({-3, -1}), vec({0, 0}), StepRule::approx);
  CHECK(approx.approximation_factor == 2);
  CHECK(approx.iterates.back() == vec({1, 1}));
}

TEST_CASE("two triangles: larger cycle first") {
  const Digraph G = perturb_costs(ddsteps::testing::two_triangles());
  const auto P = ddsteps::testing::circulation_polytope(G);
  const RatVec c = scaled(*G.costs(), Rat(-1));
  const auto trace = augment(P, c, zeros(6), StepRule::exact);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].circuit.g == vec({1, 1, 1, 0, 0, 0}));
  CHECK(trace.steps[0].improvement == Rat(3) + Rat(7, 8));
  CHECK(trace.steps[1].circuit.g == vec({0, 0, 0, 1, 1, 1}));
  CHECK(trace.steps[1].improvement == Rat(3) + Rat(7, 64));
  CHECK(trace.iterates.back() == RatVec(6, Rat(1)));
}

TEST_CASE("step rule names") {
  CHECK(to_string(StepRule::exact) == "exact");
  CHECK(to_string(StepRule::approx) == "approx");
  CHECK(to_string(StepRule::steepest) == "steepest");
}

TEST_CASE("dominance, approximation ratio and gap bound on random instances") {
  std::mt19937_64 rng(271828);
  int compared = 0;
  for (std::size_t i = 0; i < 180; ++i) {
    const auto inst = ddsteps::testing::random_instance(rng, i);
    const auto& P = inst.polyhedron;
    const auto& c = inst.objective;
    const auto exact = exact_dd_step(P, c, inst.x0);
    const auto approx = approx_dd_step(P, c, inst.x0);
    const auto oracle = best_improvement(P, c, inst.x0);
    const auto lp = solve_lp(P, c);
    const Rat gap = dot(c, inst.x0) - std::get<LpOptimal>(lp).value;
    const std::size_t k = P.dim() - P.rank_A();
    if (!oracle) {
      CHECK(std::holds_alternative<AtOptimum>(exact));
      CHECK(std::holds_alternative<AtOptimum>(approx));
      CHECK(gap == 0);
      continue;
    }
    const auto* e = std::get_if<DdStep>(&exact);
    const auto* a = std::get_if<DdStep>(&approx);
    REQUIRE(e);
    REQUIRE(a);
    check_step_invariants(P, c, inst.x0, *e);
    check_step_invariants(P, c, inst.x0, *a);
    CHECK(e->improvement == *oracle);
    CHECK(a->improvement <= e->improvement);
    CHECK(a->improvement * k >= e->improvement);
    CHECK(e->improvement * k >= gap);
    // determinism
    CHECK(std::get<DdStep>(exact_dd_step(P, c, inst.x0)).circuit.g == e->circuit.g);
    ++compared;
  }
  CHECK(compared > 60);
}

TEST_CASE("augmentation reaches the optimum and strictly decreases") {
  std::mt19937_64 rng(1618);
  for (std::size_t i = 0; i < 90; ++i) {
    const auto inst = ddsteps::testing::random_instance(rng, i);
    const auto& P = inst.polyhedron;
    const auto optimum = std::get<LpOptimal>(solve_lp(P, inst.objective)).value;
    for (const auto rule : {StepRule::exact, StepRule::approx, StepRule::steepest}) {
      const auto trace = augment(P, inst.objective, inst.x0, rule);
      CHECK(trace.status == TraceStatus::converged);
      REQUIRE(trace.iterates.size() == trace.steps.size() + 1);
      for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        CHECK(P.is_feasible(trace.iterates[s + 1]));
        CHECK(dot(inst.objective, trace.iterates[s + 1]) < dot(inst.objective, trace.iterates[s]));
        CHECK(trace.iterates[s + 1] == add(trace.iterates[s], scaled(trace.steps[s].circuit.g, trace.steps[s].alpha)));
      }
      CHECK(dot(inst.objective, trace.iterates.back()) == optimum);
    }
  }
}

TEST_CASE("exact step respects the work budget") {
  const auto P = make_box(zeros(12), RatVec(12, Rat(1)));
  CHECK_THROWS_AS((void)exact_dd_step(P, RatVec(12, Rat(-1)), zeros(12), WorkBudget{3}), SizeGuardError);
  CHECK(std::holds_alternative<DdStep>(approx_dd_step(P, RatVec(12, Rat(-1)), zeros(12))));
}
