#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ddsteps/matrix.hpp"

namespace ddsteps {

using Point = RatVec;

enum class PointedPolicy { require, allow_non_pointed };

/// P = {x in Q^n | A x = b, B x <= d}. Immutable; pointedness is decided once
/// at construction and cached.
class Polyhedron {
 public:
  /// Throws std::invalid_argument on inconsistent dimensions, and on a
  /// non-pointed system unless `policy` allows it.
  Polyhedron(RatMat A, RatVec b, RatMat B, RatVec d, PointedPolicy policy = PointedPolicy::require);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const RatMat& A() const noexcept { return A_; }
  [[nodiscard]] const RatVec& b() const noexcept { return b_; }
  [[nodiscard]] const RatMat& B() const noexcept { return B_; }
  [[nodiscard]] const RatVec& d() const noexcept { return d_; }
  [[nodiscard]] std::size_t equality_count() const noexcept { return A_.rows(); }
  [[nodiscard]] std::size_t inequality_count() const noexcept { return B_.rows(); }

  /// rank([A; B]) == n.
  [[nodiscard]] bool is_pointed() const noexcept { return pointed_; }
  [[nodiscard]] std::size_t rank_A() const noexcept { return rank_A_; }

  [[nodiscard]] bool is_feasible(std::span<const Rat> x) const;

  /// Rows j of B with (Bx)_j = d_j. Throws std::invalid_argument when x is
  /// not feasible.
  [[nodiscard]] std::vector<std::size_t> active_rows(std::span<const Rat> x) const;

  /// True iff A g = 0.
  [[nodiscard]] bool in_kernel(std::span<const Rat> g) const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  RatMat A_;
  RatVec b_;
  RatMat B_;
  RatVec d_;
  std::size_t dim_ = 0;
  std::size_t rank_A_ = 0;
  bool pointed_ = false;
};

/// Result of a ray shot: the largest beta >= 0 with x0 + beta g in P, or
/// unbounded when no row of B limits the direction.
class StepLength {
 public:
  static StepLength unbounded() { return StepLength(); }
  static StepLength bounded(Rat value) { return StepLength(std::move(value)); }

  [[nodiscard]] bool is_unbounded() const noexcept { return !value_.has_value(); }
  /// Precondition: !is_unbounded().
  [[nodiscard]] const Rat& value() const { return value_.value(); }

  friend bool operator==(const StepLength&, const StepLength&) = default;

 private:
  StepLength() = default;
  explicit StepLength(Rat value) : value_(std::move(value)) {}
  std::optional<Rat> value_;
};

/// Maximal feasible step from x0 along g. g = 0 yields a bounded length of 0.
/// Throws std::invalid_argument when x0 is infeasible or A g != 0.
StepLength max_step(const Polyhedron& P, std::span<const Rat> x0, std::span<const Rat> g);

/// {x : lower <= x <= upper}, B = [I; -I], no equalities.
Polyhedron make_box(std::span<const Rat> lower, std::span<const Rat> upper);

}  // namespace ddsteps
