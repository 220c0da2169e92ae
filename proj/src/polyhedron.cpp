#include "ddsteps/polyhedron.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace ddsteps {

Polyhedron::Polyhedron(RatMat A, RatVec b, RatMat B, RatVec d, PointedPolicy policy)
    : A_(std::move(A)), b_(std::move(b)), B_(std::move(B)), d_(std::move(d)) {
  if (A_.cols() != B_.cols()) {
    throw std::invalid_argument("polyhedron: A has " + std::to_string(A_.cols()) + " columns but B has " + std::to_string(B_.cols()));
  }
  if (b_.size() != A_.rows()) throw std::invalid_argument("polyhedron: b must have one entry per row of A");
  if (d_.size() != B_.rows()) throw std::invalid_argument("polyhedron: d must have one entry per row of B");
  dim_ = A_.cols();
  rank_A_ = rank(A_);
  pointed_ = rank(A_.stacked(B_)) == dim_;
  if (!pointed_ && policy == PointedPolicy::require) {
    throw std::invalid_argument("polyhedron is not pointed: rank([A; B]) < " + std::to_string(dim_));
  }
}

bool Polyhedron::is_feasible(std::span<const Rat> x) const {
  if (x.size() != dim_) return false;
  for (std::size_t i = 0; i < A_.rows(); ++i) {
    if (dot(A_.row(i), x) != b_[i]) return false;
  }
  for (std::size_t j = 0; j < B_.rows(); ++j) {
    if (dot(B_.row(j), x) > d_[j]) return false;
  }
  return true;
}

std::vector<std::size_t> Polyhedron::active_rows(std::span<const Rat> x) const {
  if (!is_feasible(x)) throw std::invalid_argument("active_rows: point is not feasible");
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < B_.rows(); ++j) {
    if (dot(B_.row(j), x) == d_[j]) active.push_back(j);
  }
  return active;
}

bool Polyhedron::in_kernel(std::span<const Rat> g) const {
  if (g.size() != dim_) return false;
  for (std::size_t i = 0; i < A_.rows(); ++i) {
    if (sgn(dot(A_.row(i), g)) != 0) return false;
  }
  return true;
}

StepLength max_step(const Polyhedron& P, std::span<const Rat> x0, std::span<const Rat> g) {
  if (!P.is_feasible(x0)) throw std::invalid_argument("max_step: start point is not feasible");
  if (!P.in_kernel(g)) throw std::invalid_argument("max_step: direction is not in ker(A)");
  if (is_zero(g)) return StepLength::bounded(0);
  std::optional<Rat> best;
  for (std::size_t j = 0; j < P.inequality_count(); ++j) {
    const Rat rate = dot(P.B().row(j), g);
    if (sgn(rate) <= 0) continue;
    Rat limit = (P.d()[j] - dot(P.B().row(j), x0)) / rate;
    if (!best || limit < *best) best = std::move(limit);
  }
  return best ? StepLength::bounded(*best) : StepLength::unbounded();
}

Polyhedron make_box(std::span<const Rat> lower, std::span<const Rat> upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("make_box: bound dimension mismatch");
  const std::size_t n = lower.size();
  RatMat B = RatMat::identity(n).stacked(RatMat::identity(n).negated());
  RatVec d(upper.begin(), upper.end());
  for (const auto& l : lower) d.push_back(-l);
  return Polyhedron(RatMat(0, n), {}, std::move(B), std::move(d));
}

}  // namespace ddsteps
