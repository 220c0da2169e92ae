#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "ddsteps/io.hpp"
#include "json.hpp"

using namespace ddsteps;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* const kSquare = "2 0 4\n1 0\n0 1\n-1 0\n0 -1\n1 1 0 0\n-1 -2\n";

bool has_float_literal(const std::string& text) { return std::regex_search(text, std::regex(R"(\d\.\d|\de[+-]?\d)")); }

}  // namespace

TEST_CASE("reduce then step") {
  write("cli_triangle.graph", "3 3\n1 2\n2 3\n3 1\n");
  const auto reduced = call({"reduce", "cli_triangle.graph", "-o", "cli_triangle.lp"});
  CHECK(reduced.code == 0);
  const auto step = call({"ddstep", "cli_triangle.lp", "--mode", "exact", "--from", "zeros"});
  CHECK(step.code == 0);
  CHECK(step.out.find("improvement: 31/8\n") != std::string::npos);
  CHECK(step.err.empty());

  const auto to_stdout = call({"reduce", "cli_triangle.graph"});
  CHECK(to_stdout.out == slurp("cli_triangle.lp"));
  CHECK(format_lp(parse_lp(to_stdout.out)) == to_stdout.out);

  const auto approx = call({"ddstep", "cli_triangle.lp", "--mode", "approx", "--from", "0 0 0"});
  CHECK(approx.out.find("improvement: 31/8\n") != std::string::npos);
}

TEST_CASE("ocnp exit codes") {
  write("cli_square.lp", kSquare);
  CHECK(call({"ocnp", "cli_square.lp", "--from", "0 1"}).code == cli::kOk);
  CHECK(call({"ocnp", "cli_square.lp", "--from", "0 0"}).code == cli::kNotCircuitNeighbor);
  CHECK(call({"ocnp", "cli_square.lp", "--from", "1 1"}).code == cli::kAlreadyOptimal);
  write("cli_flat.lp", "2 0 4\n1 0\n0 1\n-1 0\n0 -1\n1 1 0 0\n-1 0\n");
  CHECK(call({"ocnp", "cli_flat.lp", "--from", "0 0"}).code == cli::kNotUnique);
  write("cli_point.txt", "0 1\n");
  CHECK(call({"ocnp", "cli_square.lp", "--from", "@cli_point.txt"}).code == cli::kOk);
}

TEST_CASE("solve outcomes") {
  write("cli_square.lp", kSquare);
  const auto ok = call({"solve", "cli_square.lp"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "status: optimal\nx: 1 1\nvalue: -3\nunique: yes\n");

  write("cli_empty.lp", "1 0 2\n1\n-1\n0 -1\n1\n");
  const auto empty = call({"solve", "cli_empty.lp"});
  CHECK(empty.code == cli::kInfeasible);
  CHECK(empty.out == "status: infeasible\n");

  write("cli_ray.lp", "1 0 1\n-1\n0\n-1\n");
  CHECK(call({"solve", "cli_ray.lp"}).code == cli::kUnbounded);
  CHECK(call({"ddstep", "cli_ray.lp", "--from", "zeros"}).code == cli::kUnbounded);
}

TEST_CASE("errors go to the diagnostic stream") {
  write("cli_bad.lp", "2 0 4\n1 0\n0 1.5\n");
  const auto bad = call({"solve", "cli_bad.lp"});
  CHECK(bad.code == cli::kDataError);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("cli_bad.lp:3:4:") != std::string::npos);

  const auto missing = call({"solve", "cli_no_such_file.lp"});
  CHECK(missing.code == cli::kDataError);
  CHECK(missing.out.empty());

  write("cli_square.lp", kSquare);
  const auto infeasible_start = call({"ddstep", "cli_square.lp", "--from", "2 0"});
  CHECK(infeasible_start.code == cli::kDataError);
  CHECK(infeasible_start.out.empty());

  const auto bad_point = call({"ddstep", "cli_square.lp", "--from", "1"});
  CHECK(bad_point.code == cli::kDataError);

  CHECK(call({}).code == cli::kUsage);
  CHECK(call({"ddstep", "cli_square.lp"}).code == cli::kUsage);
  CHECK(call({"ddstep", "cli_square.lp", "--from", "zeros", "--mode", "fast"}).code == cli::kUsage);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("size guard") {
  std::string box = "12 0 24\n";
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) box += (j == i ? "1 " : "0 ");
    box += '\n';
  }
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) box += (j == i ? "-1 " : "0 ");
    box += '\n';
  }
  for (int i = 0; i < 24; ++i) box += i < 12 ? "1 " : "0 ";
  box += '\n';
  for (int i = 0; i < 12; ++i) box += "-1 ";
  box += '\n';
  write("cli_box.lp", box);
  CHECK(call({"circuits", "cli_box.lp"}).code == 0);
  setenv("DDSTEPS_WORK_BUDGET", "5", 1);
  const auto guarded = call({"circuits", "cli_box.lp"});
  unsetenv("DDSTEPS_WORK_BUDGET");
  CHECK(guarded.code == cli::kSizeGuard);
  CHECK(guarded.out.empty());
  CHECK(guarded.err.find("budget 5") != std::string::npos);
}

TEST_CASE("circuits, decompose, augment") {
  write("cli_square.lp", kSquare);
  CHECK(call({"circuits", "cli_square.lp"}).out == "0 1\n1 0\n");
  CHECK(call({"decompose", "cli_square.lp", "--from", "0 0", "--to", "1 1"}).out == "1 | 0 1\n1 | 1 0\n");
  CHECK(call({"decompose", "cli_square.lp", "--from", "0 0", "--to", "0 0"}).code == cli::kDataError);

  const auto trace = call({"augment", "cli_square.lp", "--from", "zeros", "--mode", "exact", "--trace", "cli_trace.csv"});
  CHECK(trace.code == 0);
  CHECK(trace.out == "mode: exact\nstatus: converged\nsteps: 2\nx: 1 1\nobjective: -3\n");
  CHECK(slurp("cli_trace.csv") ==
        "iteration,circuit,alpha,improvement,objective_after\n"
        "1,0 1,1,2,-2\n"
        "2,1 0,1,1,-3\n");
  CHECK(call({"augment", "cli_square.lp", "--from", "zeros", "--max-iterations", "1"}).code == cli::kIterationCap);
}

TEST_CASE("graph oracles") {
  write("cli_k3.graph", "3 6\n1 2\n2 3\n3 1\n2 1\n3 2\n1 3\n");
  CHECK(call({"longest-cycle", "cli_k3.graph"}).out == "cycle: 1 2 3\ncost: 31/8\n");
  CHECK(call({"verify", "cli_k3.graph"}).out == "correspondence: true\n");
  write("cli_path.graph", "3 2\n1 2\n2 3\n");
  CHECK(call({"longest-cycle", "cli_path.graph"}).out == "cycle: none\n");
  CHECK(call({"verify", "cli_path.graph"}).code == 0);
  write("cli_loop.graph", "2 1\n1 1\n");
  const auto loop = call({"verify", "cli_loop.graph"});
  CHECK(loop.code == cli::kDataError);
  CHECK(loop.err.find("cli_loop.graph:2:") != std::string::npos);
}

TEST_CASE("json mirrors text output") {
  write("cli_square.lp", kSquare);
  const auto doc = nlohmann::json::parse(call({"--format", "json", "ddstep", "cli_square.lp", "--from", "zeros"}).out);
  CHECK(doc["status"] == "step");
  CHECK(doc["circuit"] == nlohmann::json::array({"0", "1"}));
  CHECK(doc["improvement"] == "2");
  const auto circuits = nlohmann::json::parse(call({"circuits", "cli_square.lp", "--format", "json"}).out);
  CHECK(circuits["circuits"].size() == 2);
  write("cli_triangle.graph", "3 3\n1 2\n2 3\n3 1\n");
  const auto cycle = nlohmann::json::parse(call({"--format", "json", "longest-cycle", "cli_triangle.graph"}).out);
  CHECK(cycle["cost"] == "31/8");
}

TEST_CASE("bench is reproducible and exact") {
  const std::vector<std::string> args = {"bench", "--nodes", "5", "--trials", "12", "--seed", "17", "-o", "cli_bench_a.csv"};
  auto second = args;
  second.back() = "cli_bench_b.csv";
  CHECK(call(args).code == 0);
  CHECK(call(second).code == 0);
  const auto a = slurp("cli_bench_a.csv");
  CHECK(a == slurp("cli_bench_b.csv"));
  CHECK(a.rfind("graph_id,|V|,m,exact_improvement,approx_improvement,ratio,n_minus_rankA,exact_iters,approx_iters\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 13);
  CHECK_FALSE(has_float_literal(a));
  CHECK(call({"bench", "--nodes", "5", "--trials", "12", "--seed", "18"}).out != a);
  const auto json_rows = nlohmann::json::parse(call({"bench", "--nodes", "4", "--trials", "3", "--format", "json"}).out);
  CHECK(json_rows.size() == 3);
}
