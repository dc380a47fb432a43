#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lie/matrix.hpp"
#include "lie/rational.hpp"

namespace lie {

/// Rectangular matrix over Rational for the elimination routines.
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols);
  static Mat from_rows(std::vector<std::vector<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const;
  void swap_rows(std::size_t i, std::size_t j);

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column of each pivot row, ascending
  std::size_t rank;
};

/// Unique reduced row echelon form; exact Gauss-Jordan.
RrefResult rref(Mat m);

/// Basis of the right null space {v : m v = 0}, one vector per free
/// column (free coordinate set to 1), in ascending free-column order.
std::vector<std::vector<Rational>> kernel(const Mat& m);

/// Exact solution of a x = rhs with free variables set to zero;
/// nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const Mat& a, const std::vector<Rational>& rhs);

/// Simultaneous solve of a x = rhs for every column of rhs (one
/// elimination pass). Per-column nullopt when that column is not in the
/// column span of a. Requires a's columns independent for unique coordinates.
std::vector<std::optional<std::vector<Rational>>> solve_columns(const Mat& a, const Mat& rhs);

/// Exact inverse; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

}  // namespace lie
