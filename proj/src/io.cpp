#include "ddsteps/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace ddsteps {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::size_t length;
  std::vector<Token> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, raw.size(), {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])) != 0) ++i;
      if (i == raw.size()) break;
      const std::size_t begin = i;
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])) == 0) ++i;
      line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
    }
    if (!line.tokens.empty() && line.tokens.front().text.front() != '#') lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(significant_lines(text)) {
    std::size_t count = 1;
    for (char ch : text) count += ch == '\n' ? 1 : 0;
    total_lines_ = count;
  }

  const Line& next(const std::string& expected) {
    if (pos_ == lines_.size()) throw ParseError("unexpected end of input, expected " + expected, total_lines_, 1);
    return lines_[pos_++];
  }

  void expect_end() const {
    if (pos_ != lines_.size()) {
      const auto& line = lines_[pos_];
      throw ParseError("unexpected trailing content", line.number, line.tokens.front().column);
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t total_lines_ = 1;
};

Rat parse_token(const Line& line, const Token& token) {
  try {
    return parse_rational(token.text);
  } catch (const RationalSyntaxError& e) {
    throw ParseError(e.what(), line.number, token.column + e.offset());
  }
}

RatVec parse_row(const Line& line, std::size_t expected, const std::string& what) {
  if (line.tokens.size() != expected) {
    const std::size_t column = line.tokens.size() > expected ? line.tokens[expected].column : line.length + 1;
    throw ParseError(what + ": expected " + std::to_string(expected) + " entries, found " + std::to_string(line.tokens.size()), line.number, column);
  }
  RatVec row;
  row.reserve(expected);
  for (const auto& token : line.tokens) row.push_back(parse_token(line, token));
  return row;
}

std::size_t parse_count(const Line& line, const Token& token, const std::string& what) {
  std::size_t value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(what + " must be a nonnegative integer, got '" + std::string(token.text) + "'", line.number,
                     token.column + static_cast<std::size_t>(ptr - first));
  }
  return value;
}

void append_line(std::string& out, std::span<const Rat> values) {
  out += to_string(values);
  out += '\n';
}

}  // namespace

LpInstance parse_lp(std::string_view text, PointedPolicy policy) {
  Cursor cursor(text);
  const auto& header = cursor.next("header 'n m_A m_B'");
  if (header.tokens.size() != 3) {
    throw ParseError("header must be 'n m_A m_B'", header.number, header.tokens.size() > 3 ? header.tokens[3].column : header.length + 1);
  }
  const std::size_t n = parse_count(header, header.tokens[0], "n");
  const std::size_t mA = parse_count(header, header.tokens[1], "m_A");
  const std::size_t mB = parse_count(header, header.tokens[2], "m_B");

  RatMat A(0, n);
  for (std::size_t i = 0; i < mA; ++i) A.append_row(parse_row(cursor.next("row of A"), n, "row " + std::to_string(i + 1) + " of A"));
  RatVec b = mA > 0 ? parse_row(cursor.next("b"), mA, "b") : RatVec{};
  RatMat B(0, n);
  for (std::size_t i = 0; i < mB; ++i) B.append_row(parse_row(cursor.next("row of B"), n, "row " + std::to_string(i + 1) + " of B"));
  RatVec d = mB > 0 ? parse_row(cursor.next("d"), mB, "d") : RatVec{};
  const auto& objective_line = cursor.next("objective c");
  RatVec c = parse_row(objective_line, n, "c");
  cursor.expect_end();
  return LpInstance{Polyhedron(std::move(A), std::move(b), std::move(B), std::move(d), policy), std::move(c)};
}

std::string format_lp(const LpInstance& instance) {
  const auto& P = instance.polyhedron;
  std::string out = std::to_string(P.dim()) + ' ' + std::to_string(P.equality_count()) + ' ' + std::to_string(P.inequality_count()) + '\n';
  for (std::size_t i = 0; i < P.equality_count(); ++i) append_line(out, P.A().row(i));
  if (P.equality_count() > 0) append_line(out, P.b());
  for (std::size_t i = 0; i < P.inequality_count(); ++i) append_line(out, P.B().row(i));
  if (P.inequality_count() > 0) append_line(out, P.d());
  append_line(out, instance.objective);
  return out;
}

Point parse_point(std::string_view text, std::size_t dim) {
  Cursor cursor(text);
  Point point = parse_row(cursor.next("point"), dim, "point");
  cursor.expect_end();
  return point;
}

std::string format_point(std::span<const Rat> point) { return to_string(point); }

Digraph parse_graph(std::string_view text) {
  Cursor cursor(text);
  const auto& header = cursor.next("header '|V| m'");
  if (header.tokens.size() != 2) {
    throw ParseError("header must be '|V| m'", header.number, header.tokens.size() > 2 ? header.tokens[2].column : header.length + 1);
  }
  const std::size_t nodes = parse_count(header, header.tokens[0], "|V|");
  const std::size_t m = parse_count(header, header.tokens[1], "m");
  std::vector<Arc> arcs;
  RatVec costs;
  std::optional<bool> weighted;
  for (std::size_t e = 0; e < m; ++e) {
    const auto& line = cursor.next("arc " + std::to_string(e + 1));
    if (line.tokens.size() < 2 || line.tokens.size() > 3) {
      throw ParseError("arc line must be 'tail head [cost]'", line.number, line.tokens.size() > 3 ? line.tokens[3].column : line.length + 1);
    }
    const bool has_cost = line.tokens.size() == 3;
    if (weighted && *weighted != has_cost) {
      throw ParseError("either every arc carries a cost or none does", line.number, has_cost ? line.tokens[2].column : line.length + 1);
    }
    weighted = has_cost;
    std::size_t ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto& token = line.tokens[static_cast<std::size_t>(k)];
      ends[k] = parse_count(line, token, k == 0 ? "tail" : "head");
      if (ends[k] < 1 || ends[k] > nodes) {
        throw ParseError("node " + std::to_string(ends[k]) + " outside 1.." + std::to_string(nodes), line.number, token.column);
      }
    }
    if (ends[0] == ends[1]) throw ParseError("self-loops are not allowed", line.number, line.tokens[0].column);
    arcs.push_back({ends[0] - 1, ends[1] - 1});
    if (has_cost) costs.push_back(parse_token(line, line.tokens[2]));
  }
  cursor.expect_end();
  if (weighted.value_or(false)) return Digraph(nodes, std::move(arcs), std::move(costs));
  return Digraph(nodes, std::move(arcs));
}

std::string format_graph(const Digraph& G) {
  std::string out = std::to_string(G.node_count()) + ' ' + std::to_string(G.arc_count()) + '\n';
  for (std::size_t e = 0; e < G.arc_count(); ++e) {
    out += std::to_string(G.arcs()[e].tail + 1) + ' ' + std::to_string(G.arcs()[e].head + 1);
    if (G.costs()) out += ' ' + to_string((*G.costs())[e]);
    out += '\n';
  }
  return out;
}

std::string format_circuits(std::span<const Circuit> circuits) {
  std::string out;
  for (const auto& c : circuits) append_line(out, c.g);
  return out;
}

std::string format_conformal(const ConformalSum& sum) {
  std::string out;
  for (const auto& term : sum.terms) {
    out += to_string(term.alpha) + " | ";
    append_line(out, term.circuit.g);
  }
  return out;
}

std::string format_trace_csv(const AugmentationTrace& trace, std::span<const Rat> c) {
  std::string out = "iteration,circuit,alpha,improvement,objective_after\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    out += std::to_string(i + 1) + ',' + to_string(step.circuit.g) + ',' + to_string(step.alpha) + ',' + to_string(step.improvement) + ',' +
           to_string(dot(c, trace.iterates[i + 1])) + '\n';
  }
  return out;
}

}  // namespace ddsteps
