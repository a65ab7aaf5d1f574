#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "splinedim/rational.hpp"

namespace splinedim {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// Appends a row; the first row appended to an empty 0x0 matrix fixes cols().
  void append_row(std::span<const Rational> values);

  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Result of left-to-right elimination: the pivot columns in increasing order.
/// For any prefix of columns [0, c), the rank of that column block equals the
/// number of pivots below c.
struct EchelonProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Fraction-free (Bareiss) elimination on an integer scaling of the rows.
EchelonProfile echelon_profile(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// cols - rank.
std::size_t kernel_dim(const RatMatrix& m);

/// Reduced row echelon form over the rationals; zero rows are dropped.
struct ReducedEchelon {
  RatMatrix rows;
  std::vector<std::size_t> pivot_columns;
};
ReducedEchelon reduced_echelon(const RatMatrix& m);

/// Basis of {v : m v = 0}, one vector per row of the result.
RatMatrix nullspace(const RatMatrix& m);

}  // namespace splinedim
