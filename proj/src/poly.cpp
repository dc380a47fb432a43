#include "lie/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lie/linalg.hpp"

namespace lie {

namespace {
const Rational kZero(0);
}

QPoly::QPoly(std::initializer_list<Rational> coeffs_low_to_high) : coeffs_(coeffs_low_to_high) {
  normalize();
}

QPoly QPoly::from_coeffs(std::vector<Rational> coeffs) {
  QPoly p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

QPoly QPoly::constant(const Rational& c) { return from_coeffs({c}); }

QPoly QPoly::variable() { return QPoly{Rational(0), Rational(1)}; }

QPoly QPoly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return from_coeffs(std::move(v));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& QPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& QPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool QPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  if (is_monic()) return *this;
  const Rational inv = Rational(1) / leading();
  QPoly p = *this;
  for (Rational& c : p.coeffs_) c *= inv;
  return p;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return QPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return from_coeffs(std::move(d));
}

Rational QPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= t;
    acc += coeffs_[k];
  }
  return acc;
}

QMatrix QPoly::eval(const QMatrix& m) const {
  QMatrix acc(m.dim());
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * m;
    if (coeffs_[k] != 0) acc += QMatrix::scalar(m.dim(), coeffs_[k]);
  }
  return acc;
}

QPoly QPoly::operator+(const QPoly& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + rhs.coeff(k);
  return from_coeffs(std::move(out));
}

QPoly QPoly::operator-(const QPoly& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) - rhs.coeff(k);
  return from_coeffs(std::move(out));
}

QPoly QPoly::operator*(const QPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return QPoly();
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return from_coeffs(std::move(out));
}

QPoly QPoly::operator*(const Rational& c) const {
  QPoly p = *this;
  for (Rational& x : p.coeffs_) x *= c;
  p.normalize();
  return p;
}

QPoly QPoly::operator-() const { return *this * Rational(-1); }

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial("division by zero polynomial");
  QPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {QPoly(), rem};
  std::vector<Rational> q(rem.coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
  const Rational lead_inv = Rational(1) / divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    const Rational factor = rem.leading() * lead_inv;
    q[shift] = factor;
    for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k)
      rem.coeffs_[k + shift] -= factor * divisor.coeffs_[k];
    rem.normalize();
  }
  return {from_coeffs(std::move(q)), rem};
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = c > 0 ? c : Rational(-c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (k == 0) {
      out << rational_to_string(mag);
    } else {
      if (!unit) out << rational_to_string(mag) << "*";
      out << "T";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly u0 = QPoly::constant(1), u1;
  QPoly v0, v1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    const auto [q, r2] = r0.divmod(r1);
    QPoly u2 = u0 - q * u1;
    QPoly v2 = v0 - q * v1;
    r0 = r1;
    r1 = r2;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
  const Rational inv = Rational(1) / r0.leading();
  return {r0 * inv, u0 * inv, v0 * inv};
}

QPoly squarefree_part(const QPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("square-free part of zero polynomial");
  if (p.degree() == 0) return QPoly::constant(1);
  const QPoly g = poly_gcd(p, p.derivative());
  return (p / g).monic();
}

SplitFailure::SplitFailure(QPoly factor)
    : Error("polynomial does not split over the rationals: " + factor.str()),
      non_splitting_factor(std::move(factor)) {}

namespace {

// Trial-division factorization; fine for the coefficient sizes this
// library meets.
std::vector<Integer> sorted_divisors(Integer m) {
  if (m < 0) m = -m;
  std::map<Integer, unsigned> factors;
  Integer d(2);
  while (d * d <= m) {
    while (m % d == 0) {
      ++factors[d];
      m /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (m > 1) ++factors[m];
  std::vector<Integer> divisors{Integer(1)};
  for (const auto& [prime, count] : factors) {
    const std::size_t base = divisors.size();
    Integer power(1);
    for (unsigned e = 1; e <= count; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// Primitive integer coefficient vector with positive leading term.
std::vector<Integer> primitive_integer_coeffs(const QPoly& p) {
  Integer den_lcm(1);
  for (int k = 0; k <= p.degree(); ++k) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), p.coeff(static_cast<std::size_t>(k)).get_den().get_mpz_t());
    den_lcm = l;
  }
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()) + 1);
  Integer content(0);
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeff(static_cast<std::size_t>(k));
    out[static_cast<std::size_t>(k)] = c.get_num() * (den_lcm / c.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), out[static_cast<std::size_t>(k)].get_mpz_t());
    content = g;
  }
  if (content > 1)
    for (Integer& c : out) c /= content;
  if (out.back() < 0)
    for (Integer& c : out) c = -c;
  return out;
}

}  // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational roots of zero polynomial");
  std::vector<std::pair<Rational, unsigned>> roots;

  QPoly rest = p;
  // root zero first
  unsigned zero_mult = 0;
  while (rest.degree() >= 1 && rest.coeff(0) == 0) {
    rest = rest / QPoly::variable();
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (rest.degree() >= 1) {
    const std::vector<Integer> ic = primitive_integer_coeffs(rest);
    const std::vector<Integer> num_divs = sorted_divisors(ic.front());
    const std::vector<Integer> den_divs = sorted_divisors(ic.back());
    std::vector<Rational> candidates;
    for (const Integer& a : num_divs) {
      for (const Integer& b : den_divs) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        candidates.push_back(make_rational(a, b));
        candidates.push_back(make_rational(-a, b));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rational& r : candidates) {
      unsigned mult = 0;
      while (rest.degree() >= 1 && rest.eval(r) == 0) {
        rest = rest / QPoly{-r, Rational(1)};
        ++mult;
      }
      if (mult > 0) roots.emplace_back(r, mult);
      if (rest.degree() < 1) break;
    }
  }
  if (rest.degree() >= 1) throw SplitFailure(rest.monic());

  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

namespace {

Rational product_trace(const QMatrix& a, const QMatrix& b) {
  Rational t(0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.at(i, j) != 0 && b.at(j, i) != 0) t += a.at(i, j) * b.at(j, i);
  return t;
}

}  // namespace

QPoly charpoly(const QMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix m(n);  // zero
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    if (c[n - k + 1] != 0) m += QMatrix::scalar(n, c[n - k + 1]);
    c[n - k] = -product_trace(a, m) / Rational(static_cast<long>(k));
  }
  return QPoly::from_coeffs(std::move(c));
}

QPoly minpoly(const QMatrix& a) {
  const std::size_t n = a.dim();
  // echelon rows over the flattened matrix space together with the
  // combination that produced them
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Rational>> combos;

  QMatrix power = QMatrix::identity(n);
  for (std::size_t k = 0;; ++k) {
    std::vector<Rational> v = power.flatten();
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational f = v[pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
      for (std::size_t j = 0; j < combos[i].size(); ++j) c[j] -= f * combos[i][j];
    }
    std::size_t piv = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == v.size()) return QPoly::from_coeffs(std::move(c));  // monic by construction
    const Rational inv = Rational(1) / v[piv];
    for (Rational& x : v) x *= inv;
    for (Rational& x : c) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    combos.push_back(std::move(c));
    power = power * a;  // k runs to at most n, where dependency is certain
  }
}

}  // namespace lie
