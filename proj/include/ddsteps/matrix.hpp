#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ddsteps/rational.hpp"

namespace ddsteps {

/// Dense row-major rational matrix. A matrix may have zero rows and still
/// carry a column count, which is how empty constraint blocks are encoded.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  /// Every row must have exactly `cols` entries.
  static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
  static RatMat identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<Rat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] RatVec column(std::size_t j) const;

  void append_row(std::span<const Rat> values);

  [[nodiscard]] RatVec multiply(std::span<const Rat> x) const;
  [[nodiscard]] RatMat multiply(const RatMat& rhs) const;
  [[nodiscard]] RatMat transposed() const;
  /// Rows of `*this` followed by rows of `below`.
  [[nodiscard]] RatMat stacked(const RatMat& below) const;
  [[nodiscard]] RatMat select_rows(std::span<const std::size_t> indices) const;
  [[nodiscard]] RatMat negated() const;

  friend bool operator==(const RatMat&, const RatMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct EchelonForm {
  RatMat reduced;                        // reduced row echelon form
  std::vector<std::size_t> pivot_cols;   // one per nonzero row, increasing
};

/// Gauss-Jordan elimination; the pivot of each column is the first row at
/// or below the current position holding a nonzero entry.
EchelonForm reduced_row_echelon(RatMat m);

std::size_t rank(const RatMat& m);

/// Null-space basis of size cols - rank, each vector scaled to coprime
/// integers with first nonzero entry positive.
std::vector<RatVec> kernel_basis(const RatMat& m);

/// One exact solution of m x = rhs (free variables set to zero), or nothing
/// when the system is inconsistent. Throws std::invalid_argument on a
/// dimension mismatch.
std::optional<RatVec> solve(const RatMat& m, std::span<const Rat> rhs);

}  // namespace ddsteps
