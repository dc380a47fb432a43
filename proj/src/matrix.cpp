#include "lie/matrix.hpp"

#include "lie/errors.hpp"

namespace lie {

QMatrix::QMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Rational(0)) {
  if (dim == 0) throw Error("matrix dimension must be at least 1");
}

QMatrix QMatrix::identity(std::size_t dim) { return scalar(dim, Rational(1)); }

QMatrix QMatrix::scalar(std::size_t dim, const Rational& c) {
  QMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c;
  return m;
}

bool QMatrix::is_zero() const {
  for (const Rational& e : entries_)
    if (e != 0) return false;
  return true;
}

Rational QMatrix::trace() const {
  Rational t(0);
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

QMatrix QMatrix::pow(unsigned long k) const {
  QMatrix result = identity(dim_);
  QMatrix base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return result;
}

QMatrix QMatrix::unflatten(std::size_t dim, const std::vector<Rational>& flat) {
  if (flat.size() != dim * dim) throw DimensionMismatch("unflatten: wrong length");
  QMatrix m(dim);
  m.entries_ = flat;
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix sum: sizes differ");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionMismatch("matrix difference: sizes differ");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
  for (Rational& e : entries_) e *= c;
  return *this;
}

QMatrix QMatrix::operator-() const {
  QMatrix m = *this;
  for (Rational& e : m.entries_) e = -e;
  return m;
}

QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw DimensionMismatch("matrix product: sizes differ");
  const std::size_t n = lhs.dim_;
  QMatrix out(n);
  Rational acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& a = lhs.at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& b = rhs.at(k, j);
        if (b == 0) continue;
        acc = a * b;
        out.at(i, j) += acc;
      }
    }
  }
  return out;
}

}  // namespace lie
