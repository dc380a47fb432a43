#pragma once

#include <cstddef>
#include <vector>

#include "lie/rational.hpp"

namespace lie {

/// Dense square matrix over the rationals; the element type of gl(n).
/// Equality is entrywise and exact.
class QMatrix {
 public:
  explicit QMatrix(std::size_t dim);  // zero matrix
  static QMatrix identity(std::size_t dim);
  static QMatrix scalar(std::size_t dim, const Rational& c);

  std::size_t dim() const { return dim_; }

  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  bool is_zero() const;
  Rational trace() const;
  QMatrix pow(unsigned long k) const;

  /// Row-major flattening of length dim()^2; the coordinates every
  /// subspace computation works in.
  std::vector<Rational> flatten() const { return entries_; }
  static QMatrix unflatten(std::size_t dim, const std::vector<Rational>& flat);

  QMatrix& operator+=(const QMatrix& rhs);
  QMatrix& operator-=(const QMatrix& rhs);
  QMatrix& operator*=(const Rational& c);
  QMatrix operator-() const;

  friend QMatrix operator+(QMatrix lhs, const QMatrix& rhs) { return lhs += rhs; }
  friend QMatrix operator-(QMatrix lhs, const QMatrix& rhs) { return lhs -= rhs; }
  friend QMatrix operator*(QMatrix lhs, const Rational& c) { return lhs *= c; }
  friend QMatrix operator*(const Rational& c, QMatrix rhs) { return rhs *= c; }
  friend QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs);

  bool operator==(const QMatrix& rhs) const = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;  // row-major
};

}  // namespace lie
