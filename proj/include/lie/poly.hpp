#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lie/errors.hpp"
#include "lie/matrix.hpp"
#include "lie/rational.hpp"

namespace lie {

/// Univariate polynomial over the rationals, dense coefficients
/// low-to-high, never a trailing zero coefficient.
class QPoly {
 public:
  QPoly() = default;  // zero polynomial
  QPoly(std::initializer_list<Rational> coeffs_low_to_high);
  static QPoly from_coeffs(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly variable();                                   // T
  static QPoly monomial(std::size_t k, const Rational& c);   // c*T^k

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of T^k (zero beyond the degree).
  const Rational& coeff(std::size_t k) const;
  const Rational& leading() const;
  bool is_monic() const;

  QPoly monic() const;
  QPoly derivative() const;
  Rational eval(const Rational& t) const;
  QMatrix eval(const QMatrix& m) const;  // Horner

  QPoly operator+(const QPoly& rhs) const;
  QPoly operator-(const QPoly& rhs) const;
  QPoly operator*(const QPoly& rhs) const;
  QPoly operator*(const Rational& c) const;
  QPoly operator-() const;
  bool operator==(const QPoly& rhs) const = default;

  /// Exact euclidean division: returns (quotient, remainder).
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  QPoly operator/(const QPoly& divisor) const { return divmod(divisor).first; }
  QPoly operator%(const QPoly& divisor) const { return divmod(divisor).second; }

  std::string str() const;  // e.g. "T^4 - 2*T^3"

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// Extended gcd: g = u*a + v*b with g monic (or zero).
struct PolyExtGcd {
  QPoly g, u, v;
};
PolyExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b);

/// p / gcd(p, p'), monic. Throws ZeroPolynomial on the zero input.
QPoly squarefree_part(const QPoly& p);

/// Raised when a polynomial does not split over the rationals; carries
/// the monic non-splitting factor.
struct SplitFailure : Error {
  explicit SplitFailure(QPoly factor);
  QPoly non_splitting_factor;
};

/// All rational roots with multiplicities, sorted by root value.
/// Multiplicities sum to deg p exactly when p splits over the
/// rationals; otherwise throws SplitFailure.
std::vector<std::pair<Rational, unsigned>> rational_roots(const QPoly& p);

/// Monic characteristic polynomial, division-free (Faddeev-LeVerrier).
QPoly charpoly(const QMatrix& a);

/// Monic minimal polynomial via the first linear dependency in the
/// Krylov sequence I, a, a^2, ... inside the flattened matrix space.
QPoly minpoly(const QMatrix& a);

}  // namespace lie
