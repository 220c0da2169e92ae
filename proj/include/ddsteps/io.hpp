#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ddsteps/circuits.hpp"
#include "ddsteps/conformal.hpp"
#include "ddsteps/ddstep.hpp"
#include "ddsteps/reductions.hpp"

namespace ddsteps {

/// Malformed input with a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

struct LpInstance {
  Polyhedron polyhedron;
  RatVec objective;
  friend bool operator==(const LpInstance&, const LpInstance&) = default;
};

// LP instance file:
//   n m_A m_B
//   m_A rows of A, then b (omitted when m_A = 0)
//   m_B rows of B, then d (omitted when m_B = 0)
//   c
// Blank lines and lines starting with '#' are ignored.
LpInstance parse_lp(std::string_view text, PointedPolicy policy = PointedPolicy::require);
std::string format_lp(const LpInstance& instance);

/// One line of `dim` rationals.
Point parse_point(std::string_view text, std::size_t dim);
std::string format_point(std::span<const Rat> point);

// Graph file: "|V| m", then m lines "tail head [cost]", 1-based nodes.
// Either every arc carries a cost or none does.
Digraph parse_graph(std::string_view text);
std::string format_graph(const Digraph& G);

/// One circuit per line as space-separated integers.
std::string format_circuits(std::span<const Circuit> circuits);

/// One term per line: "alpha | g_1 ... g_n".
std::string format_conformal(const ConformalSum& sum);

/// CSV with header iteration,circuit,alpha,improvement,objective_after.
std::string format_trace_csv(const AugmentationTrace& trace, std::span<const Rat> c);

}  // namespace ddsteps
