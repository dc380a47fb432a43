#include "lie/linalg.hpp"

#include <utility>

#include "lie/errors.hpp"

namespace lie {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

Mat Mat::from_rows(std::vector<std::vector<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = std::move(rows[i][j]);
  }
  return m;
}

std::vector<Rational> Mat::row(std::size_t i) const {
  return std::vector<Rational>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Mat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(a_[i * cols_ + k], a_[j * cols_ + k]);
}

RrefResult rref(Mat m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    // normalize pivot row
    const Rational inv = Rational(1) / m(r, col);
    if (inv != 1)
      for (std::size_t j = col; j < cols; ++j) m(r, j) *= inv;
    // eliminate everywhere else
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return RrefResult{std::move(m), std::move(pivots), r};
}

std::vector<std::vector<Rational>> kernel(const Mat& m) {
  const RrefResult R = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : R.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = -R.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Mat& a, const std::vector<Rational>& rhs) {
  if (rhs.size() != a.rows()) throw DimensionMismatch("solve: rhs length");
  Mat rhs_col(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) rhs_col(i, 0) = rhs[i];
  return solve_columns(a, rhs_col)[0];
}

std::vector<std::optional<std::vector<Rational>>> solve_columns(const Mat& a, const Mat& rhs) {
  if (rhs.rows() != a.rows()) throw DimensionMismatch("solve_columns: row counts differ");
  const std::size_t n = a.cols(), k = rhs.cols();
  Mat aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = rhs(i, j);
  }
  const RrefResult R = rref(std::move(aug));

  // rows whose pivot falls in the rhs block witness inconsistency for
  // every rhs column they touch
  std::vector<bool> bad(k, false);
  std::size_t system_rank = 0;
  for (std::size_t i = 0; i < R.pivots.size(); ++i) {
    if (R.pivots[i] < n) {
      system_rank = i + 1;
      continue;
    }
    for (std::size_t j = 0; j < k; ++j)
      if (R.reduced(i, n + j) != 0) bad[j] = true;
  }

  std::vector<std::optional<std::vector<Rational>>> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (bad[j]) continue;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < system_rank; ++i) x[R.pivots[i]] = R.reduced(i, n + j);
    out[j] = std::move(x);
  }
  return out;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.dim();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m.at(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult R = rref(std::move(aug));
  if (R.rank != n || R.pivots.back() != n - 1) return std::nullopt;
  QMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = R.reduced(i, n + j);
  return inv;
}

}  // namespace lie
