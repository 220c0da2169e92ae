#include "ddsteps/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ddsteps {

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMat m(0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec RatMat::column(std::size_t j) const {
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void RatMat::append_row(std::span<const Rat> values) {
  if (values.size() != cols_) throw std::invalid_argument("append_row: expected " + std::to_string(cols_) + " entries");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RatVec RatMat::multiply(std::span<const Rat> x) const {
  if (x.size() != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), x);
  return out;
}

RatMat RatMat::multiply(const RatMat& rhs) const {
  if (rhs.rows_ != cols_) throw std::invalid_argument("multiply: dimension mismatch");
  RatMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

RatMat RatMat::transposed() const {
  RatMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatMat RatMat::stacked(const RatMat& below) const {
  if (below.cols_ != cols_) throw std::invalid_argument("stacked: column mismatch");
  RatMat out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

RatMat RatMat::select_rows(std::span<const std::size_t> indices) const {
  RatMat out(0, cols_);
  for (auto i : indices) out.append_row(row(i));
  return out;
}

RatMat RatMat::negated() const {
  RatMat out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

EchelonForm reduced_row_echelon(RatMat m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(next_row, j));
    }
    const Rat inv = 1 / m(next_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(next_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == next_row || sgn(m(i, col)) == 0) continue;
      const Rat factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (sgn(m(next_row, j)) != 0) m(i, j) -= factor * m(next_row, j);
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMat& m) { return reduced_row_echelon(m).pivot_cols.size(); }

std::vector<RatVec> kernel_basis(const RatMat& m) {
  const auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivot_cols) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v = zeros(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) v[ech.pivot_cols[i]] = -ech.reduced(i, free);
    basis.push_back(canonical_direction(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMat& m, std::span<const Rat> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs has " + std::to_string(rhs.size()) + " entries, matrix has " + std::to_string(m.rows()) + " rows");
  RatMat augmented(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) augmented(i, j) = m(i, j);
    augmented(i, m.cols()) = rhs[i];
  }
  const auto ech = reduced_row_echelon(std::move(augmented));
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols()) return std::nullopt;
  RatVec x = zeros(m.cols());
  for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) x[ech.pivot_cols[i]] = ech.reduced(i, m.cols());
  return x;
}

}  // namespace ddsteps
