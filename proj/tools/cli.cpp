#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ddsteps/conformal.hpp"
#include "ddsteps/ddstep.hpp"
#include "ddsteps/io.hpp"
#include "ddsteps/lp.hpp"
#include "ddsteps/ocnp.hpp"
#include "ddsteps/reductions.hpp"
#include "json.hpp"

namespace ddsteps::cli {

namespace {

using json = nlohmann::ordered_json;

// Unreadable input files; reported with the path.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A ParseError tagged with the file it came from.
struct SourceError {
  std::string source;
  ParseError error;
};

json rationals(std::span<const Rat> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

// Key/value report rendered as "key: value" lines or one JSON object.
class Report {
 public:
  void field(const std::string& key, const std::string& value) {
    doc_[key] = value;
    text_ += key + ": " + value + '\n';
  }
  void vector(const std::string& key, std::span<const Rat> values) {
    doc_[key] = rationals(values);
    text_ += key + ": " + to_string(values) + '\n';
  }
  void raw(const std::string& key, json value, const std::string& text) {
    doc_[key] = std::move(value);
    text_ += text;
  }
  void write(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << doc_.dump(2) << '\n';
    } else {
      out << text_;
    }
  }

 private:
  json doc_ = json::object();
  std::string text_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("cannot write '" + path + "'");
}

template <typename Fn>
auto parsing(const std::string& source, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw SourceError{source, e};
  }
}

LpInstance load_lp(const std::string& path) {
  const std::string text = read_file(path);
  return parsing(path, [&] { return parse_lp(text); });
}

Digraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  return parsing(path, [&] { return parse_graph(text); });
}

// "zeros", "@file" or the point itself as a string.
Point resolve_point(const std::string& text, std::size_t dim) {
  if (text == "zeros") return zeros(dim);
  if (!text.empty() && text.front() == '@') {
    const std::string path = text.substr(1);
    const std::string contents = read_file(path);
    return parsing(path, [&] { return parse_point(contents, dim); });
  }
  return parsing("point '" + text + "'", [&] { return parse_point(text, dim); });
}

StepRule parse_rule(const std::string& mode) {
  if (mode == "approx") return StepRule::approx;
  if (mode == "steepest") return StepRule::steepest;
  return StepRule::exact;
}

StepOutcome take_step(const Polyhedron& P, std::span<const Rat> c, std::span<const Rat> x0, StepRule rule) {
  switch (rule) {
    case StepRule::approx:
      return approx_dd_step(P, c, x0);
    case StepRule::steepest:
      return steepest_descent_step(P, c, x0);
    case StepRule::exact:
      break;
  }
  return exact_dd_step(P, c, x0);
}

std::string arc_list(std::span<const std::size_t> arcs) {
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(arcs[i] + 1);
  }
  return out;
}

int cmd_solve(const std::string& file, Report& report) {
  const auto inst = load_lp(file);
  const auto outcome = solve_lp(inst.polyhedron, inst.objective);
  if (std::holds_alternative<LpInfeasible>(outcome)) {
    report.field("status", "infeasible");
    return kInfeasible;
  }
  if (const auto* unb = std::get_if<LpUnbounded>(&outcome)) {
    report.field("status", "unbounded");
    report.vector("direction", unb->direction);
    return kUnbounded;
  }
  const auto& opt = std::get<LpOptimal>(outcome);
  const auto uniqueness = verify_unique(inst.polyhedron, inst.objective, opt);
  report.field("status", "optimal");
  report.vector("x", opt.vertex);
  report.field("value", to_string(opt.value));
  report.field("unique", uniqueness.unique ? "yes" : "no");
  if (uniqueness.witness) report.vector("witness", *uniqueness.witness);
  return kOk;
}

int cmd_circuits(const std::string& file, Report& report) {
  const auto inst = load_lp(file);
  const auto circuits = enumerate_circuits(inst.polyhedron);
  json list = json::array();
  for (const auto& c : circuits) list.push_back(rationals(c.g));
  report.raw("circuits", std::move(list), format_circuits(circuits));
  return kOk;
}

int cmd_ddstep(const std::string& file, const std::string& from, const std::string& mode, Report& report) {
  const auto inst = load_lp(file);
  const auto& P = inst.polyhedron;
  const Point x0 = resolve_point(from, P.dim());
  if (!P.is_feasible(x0)) throw std::invalid_argument("start point is not feasible");
  const auto outcome = take_step(P, inst.objective, x0, parse_rule(mode));
  report.field("mode", mode);
  if (std::holds_alternative<AtOptimum>(outcome)) {
    report.field("status", "optimal");
    return kOk;
  }
  if (const auto* unb = std::get_if<UnboundedImprovement>(&outcome)) {
    report.field("status", "unbounded");
    report.vector("circuit", unb->circuit.g);
    return kUnbounded;
  }
  if (const auto* unb = std::get_if<LpUnboundedOutcome>(&outcome)) {
    report.field("status", "unbounded");
    report.vector("direction", unb->direction);
    return kUnbounded;
  }
  const auto& step = std::get<DdStep>(outcome);
  const Point next = add(x0, scaled(step.circuit.g, step.alpha));
  report.field("status", "step");
  report.vector("circuit", step.circuit.g);
  report.field("alpha", to_string(step.alpha));
  report.field("improvement", to_string(step.improvement));
  report.vector("x", next);
  report.field("objective", to_string(dot(inst.objective, next)));
  return kOk;
}

int cmd_ocnp(const std::string& file, const std::string& from, Report& report) {
  const auto inst = load_lp(file);
  const Point x0 = resolve_point(from, inst.polyhedron.dim());
  const auto verdict = decide_ocnp(inst.polyhedron, inst.objective, x0);
  if (std::holds_alternative<AlreadyOptimal>(verdict)) {
    report.field("verdict", "already-optimal");
    return kAlreadyOptimal;
  }
  if (const auto* yes = std::get_if<CircuitNeighbor>(&verdict)) {
    report.field("verdict", "circuit-neighbor");
    report.vector("x*", yes->xstar);
    report.vector("direction", subtract(yes->xstar, x0));
    return kOk;
  }
  if (const auto* no = std::get_if<NotCircuitNeighbor>(&verdict)) {
    report.field("verdict", "not-circuit-neighbor");
    report.vector("x*", no->xstar);
    report.vector("direction", subtract(no->xstar, x0));
    return kNotCircuitNeighbor;
  }
  const auto& multi = std::get<NotUnique>(verdict);
  report.field("verdict", "not-unique");
  report.vector("x*", multi.xstar);
  if (multi.report.witness) report.vector("witness", *multi.report.witness);
  return kNotUnique;
}

int cmd_decompose(const std::string& file, const std::string& from, const std::string& to, Report& report) {
  const auto inst = load_lp(file);
  const auto n = inst.polyhedron.dim();
  const Point x0 = resolve_point(from, n);
  const Point x1 = resolve_point(to, n);
  const auto sum = decompose(inst.polyhedron, subtract(x1, x0));
  json terms = json::array();
  for (const auto& term : sum.terms) terms.push_back({{"alpha", to_string(term.alpha)}, {"circuit", rationals(term.circuit.g)}});
  report.raw("terms", std::move(terms), format_conformal(sum));
  return kOk;
}

int cmd_augment(const std::string& file, const std::string& from, const std::string& mode, const std::string& trace_path,
                std::size_t max_iterations, Report& report) {
  const auto inst = load_lp(file);
  const auto& P = inst.polyhedron;
  const Point x0 = resolve_point(from, P.dim());
  if (!P.is_feasible(x0)) throw std::invalid_argument("start point is not feasible");
  const auto trace = augment(P, inst.objective, x0, parse_rule(mode), max_iterations);
  if (!trace_path.empty()) write_file(trace_path, format_trace_csv(trace, inst.objective));
  const char* status = trace.status == TraceStatus::converged ? "converged"
                       : trace.status == TraceStatus::unbounded ? "unbounded"
                                                                : "iteration-cap";
  report.field("mode", mode);
  report.field("status", status);
  report.field("steps", std::to_string(trace.steps.size()));
  if (trace.rule == StepRule::approx) report.field("approximation-factor", std::to_string(trace.approximation_factor));
  report.vector("x", trace.iterates.back());
  report.field("objective", to_string(dot(inst.objective, trace.iterates.back())));
  if (trace.status == TraceStatus::unbounded) return kUnbounded;
  if (trace.status == TraceStatus::iteration_cap) return kIterationCap;
  return kOk;
}

int cmd_reduce(const std::string& file, const std::string& output, Report& report, std::ostream& out) {
  const auto G = load_graph(file);
  const auto inst = build_reduction(G);
  const std::string text = format_lp(LpInstance{inst.polyhedron, inst.objective});
  if (output.empty()) {
    out << text;
    return kOk;
  }
  write_file(output, text);
  report.field("arcs", std::to_string(G.arc_count()));
  report.vector("costs", *inst.source.costs());
  report.vector("optimum", inst.optimum);
  return kOk;
}

constexpr std::size_t kOracleNodes = 10;

Digraph oracle_graph(const std::string& file) {
  Digraph G = load_graph(file);
  if (G.node_count() > kOracleNodes) {
    throw SizeGuardError("cycle oracle limited to " + std::to_string(kOracleNodes) + " nodes, graph has " + std::to_string(G.node_count()),
                         G.node_count(), kOracleNodes);
  }
  return G;
}

int cmd_longest_cycle(const std::string& file, Report& report) {
  const Digraph G = oracle_graph(file);
  const Digraph costed = G.has_unit_costs() ? perturb_costs(G) : G;
  const auto cycle = longest_cycle_oracle(costed, kOracleNodes);
  if (!cycle) {
    report.field("cycle", "none");
    return kOk;
  }
  report.field("cycle", arc_list(cycle->arcs));
  report.field("cost", to_string(cycle->cost));
  return kOk;
}

int cmd_verify(const std::string& file, Report& report) {
  const Digraph G = oracle_graph(file);
  const bool ok = verify_correspondence(G);
  report.field("correspondence", ok ? "true" : "false");
  return ok ? kOk : kVerifyFailed;
}

struct BenchOptions {
  std::size_t nodes = 5;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t max_arcs = 10;
  std::string output;
};

Rat improvement_of(const StepOutcome& outcome) {
  if (const auto* step = std::get_if<DdStep>(&outcome)) return step->improvement;
  if (std::holds_alternative<AtOptimum>(outcome)) return 0;
  throw std::logic_error("bench: reduction LP reported an unbounded step");
}

int cmd_bench(const BenchOptions& options, bool as_json, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(options.seed);
  std::string csv = "graph_id,|V|,m,exact_improvement,approx_improvement,ratio,n_minus_rankA,exact_iters,approx_iters\n";
  json rows = json::array();
  std::size_t violations = 0;
  std::optional<Rat> worst;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const Digraph G = random_digraph(rng, options.nodes, options.max_arcs);
    const auto inst = build_reduction(G);
    const auto& P = inst.polyhedron;
    const Rat exact = improvement_of(exact_dd_step(P, inst.objective, inst.x0));
    const Rat approx = improvement_of(approx_dd_step(P, inst.objective, inst.x0));
    const std::size_t k = P.dim() - P.rank_A();
    std::string ratio;
    if (sgn(exact) > 0) {
      const Rat r = approx / exact;
      ratio = to_string(r);
      if (r * k < 1) ++violations;
      if (!worst || r < *worst) worst = r;
    }
    const auto exact_iters = augment(P, inst.objective, inst.x0, StepRule::exact).steps.size();
    const auto approx_iters = augment(P, inst.objective, inst.x0, StepRule::approx).steps.size();
    csv += std::to_string(t + 1) + ',' + std::to_string(G.node_count()) + ',' + std::to_string(G.arc_count()) + ',' + to_string(exact) + ',' +
           to_string(approx) + ',' + ratio + ',' + std::to_string(k) + ',' + std::to_string(exact_iters) + ',' + std::to_string(approx_iters) +
           '\n';
    rows.push_back({{"graph_id", t + 1},
                    {"|V|", G.node_count()},
                    {"m", G.arc_count()},
                    {"exact_improvement", to_string(exact)},
                    {"approx_improvement", to_string(approx)},
                    {"ratio", ratio},
                    {"n_minus_rankA", k},
                    {"exact_iters", exact_iters},
                    {"approx_iters", approx_iters}});
  }
  const std::string payload = as_json ? rows.dump(2) + '\n' : csv;
  if (options.output.empty()) {
    out << payload;
  } else {
    write_file(options.output, payload);
  }
  err << "bench: " << options.trials << " graphs, min ratio " << (worst ? to_string(*worst) : std::string("n/a")) << ", bound violations "
      << violations << '\n';
  return violations == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact circuit steps, OCNP and hardness-reduction instances for linear programs", "ddsteps"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file;
  std::string from;
  std::string to;
  std::string mode = "exact";
  std::string trace_path;
  std::string output;
  std::size_t max_iterations = 10'000;
  BenchOptions bench;
  const auto modes = CLI::IsMember({"exact", "approx", "steepest"});

  auto* solve = app.add_subcommand("solve", "Solve the LP and verify uniqueness of the optimum");
  solve->add_option("file", file, "LP instance")->required();
  auto* circuits = app.add_subcommand("circuits", "Enumerate all circuits");
  circuits->add_option("file", file, "LP instance")->required();
  auto* ddstep = app.add_subcommand("ddstep", "Take one deepest-descent circuit step");
  ddstep->add_option("file", file, "LP instance")->required();
  ddstep->add_option("--from", from, "Start point: 'zeros', '@FILE' or a quoted point")->required();
  ddstep->add_option("--mode", mode, "exact, approx or steepest")->check(modes);
  auto* ocnp = app.add_subcommand("ocnp", "Decide the optimal circuit-neighbour problem");
  ocnp->add_option("file", file, "LP instance")->required();
  ocnp->add_option("--from", from, "Start point")->required();
  auto* conformal = app.add_subcommand("decompose", "Conformal decomposition of TO - FROM");
  conformal->add_option("file", file, "LP instance")->required();
  conformal->add_option("--from", from, "Start point")->required();
  conformal->add_option("--to", to, "End point")->required();
  auto* augmentation = app.add_subcommand("augment", "Iterate circuit steps to optimality");
  augmentation->add_option("file", file, "LP instance")->required();
  augmentation->add_option("--from", from, "Start point")->required();
  augmentation->add_option("--mode", mode, "exact, approx or steepest")->check(modes);
  augmentation->add_option("--trace", trace_path, "Write the step trace as CSV");
  augmentation->add_option("--max-iterations", max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
  auto* reduce = app.add_subcommand("reduce", "Circulation LP of a digraph with perturbed costs");
  reduce->add_option("file", file, "Graph file")->required();
  reduce->add_option("-o,--output", output, "Write the LP here instead of stdout");
  auto* longest = app.add_subcommand("longest-cycle", "Maximum-cost directed cycle by enumeration");
  longest->add_option("file", file, "Graph file")->required();
  auto* verify = app.add_subcommand("verify", "Check the dd-step / longest-cycle correspondence");
  verify->add_option("file", file, "Graph file")->required();
  auto* benchmark = app.add_subcommand("bench", "Exact vs approximate steps on random digraphs");
  benchmark->add_option("--nodes", bench.nodes, "Nodes per graph")->required()->check(CLI::Range(1, 10));
  benchmark->add_option("--trials", bench.trials, "Number of graphs");
  benchmark->add_option("--seed", bench.seed, "Generator seed");
  benchmark->add_option("--max-arcs", bench.max_arcs, "Arc cap per graph");
  benchmark->add_option("-o,--output", bench.output, "Write the table here instead of stdout");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool as_json = format == "json";
  Report report;
  int code = kOk;
  try {
    if (solve->parsed()) {
      code = cmd_solve(file, report);
    } else if (circuits->parsed()) {
      code = cmd_circuits(file, report);
    } else if (ddstep->parsed()) {
      code = cmd_ddstep(file, from, mode, report);
    } else if (ocnp->parsed()) {
      code = cmd_ocnp(file, from, report);
    } else if (conformal->parsed()) {
      code = cmd_decompose(file, from, to, report);
    } else if (augmentation->parsed()) {
      code = cmd_augment(file, from, mode, trace_path, max_iterations, report);
    } else if (reduce->parsed()) {
      code = cmd_reduce(file, output, report, out);
    } else if (longest->parsed()) {
      code = cmd_longest_cycle(file, report);
    } else if (verify->parsed()) {
      code = cmd_verify(file, report);
    } else {
      return cmd_bench(bench, as_json, out, err);
    }
  } catch (const SourceError& e) {
    err << "error: " << e.source << ":" << e.error.line() << ":" << e.error.column() << ": " << e.error.message() << '\n';
    return kDataError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const SizeGuardError& e) {
    err << "error: size guard: " << e.what() << " (requested " << e.requested() << ", budget " << e.budget() << ")\n";
    return kSizeGuard;
  } catch (const LpNotSolvableError& e) {
    err << "error: " << e.what() << '\n';
    return e.reason() == LpNotSolvableError::Reason::unbounded ? kUnbounded : kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  report.write(out, as_json);
  return code;
}

}  // namespace ddsteps::cli
