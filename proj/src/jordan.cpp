#include "lie/jordan.hpp"

#include "lie/errors.hpp"

namespace lie {

namespace {

// f(s) mod chi by Horner over Q[T]/(chi).
QPoly compose_mod(const QPoly& f, const QPoly& s, const QPoly& chi) {
  QPoly acc;
  for (int k = f.degree(); k >= 0; --k) {
    acc = (acc * s) % chi;
    const Rational& c = f.coeff(static_cast<std::size_t>(k));
    if (c != 0) acc = acc + QPoly::constant(c);
  }
  return acc;
}

}  // namespace

JordanPair jordan_decompose(const QMatrix& x) {
  const std::size_t n = x.dim();
  const QPoly chi = charpoly(x);
  const QPoly f = squarefree_part(chi);

  QPoly s = QPoly::variable();
  if (f.degree() < chi.degree()) {
    // g inverts f' modulo f; exists since f is square-free
    const PolyExtGcd e = poly_ext_gcd(f.derivative(), f);
    const QPoly& g = e.u;
    // each step squares the ideal containing f(s); multiplicities are
    // at most n, so the cap is generous
    std::size_t cap = 1;
    for (std::size_t m = 1; m < n; m <<= 1U) ++cap;
    cap += 2;
    while (true) {
      const QPoly fs = compose_mod(f, s, chi);
      if (fs.is_zero()) break;
      if (cap-- == 0) throw Error("additive decomposition did not converge");
      const QPoly gs = compose_mod(g, s, chi);
      s = (s - fs * gs) % chi;
    }
  }

  QMatrix semisimple = s.eval(x);
  QMatrix nilpotent = x - semisimple;
  QPoly nil_witness = QPoly::variable() - s;
  return JordanPair{std::move(semisimple), std::move(nilpotent), std::move(s), std::move(nil_witness)};
}

bool is_semisimple(const QMatrix& x) {
  const QPoly m = minpoly(x);
  return poly_gcd(m, m.derivative()).degree() == 0;
}

bool is_nilpotent_matrix(const QMatrix& x) {
  QMatrix p = x;
  for (std::size_t reach = 1;; reach <<= 1U) {
    if (p.is_zero()) return true;
    if (reach >= x.dim()) return false;
    p = p * p;
  }
}

Eigenstructure eigenstructure(const QMatrix& xs) {
  const QPoly m = minpoly(xs);
  if (poly_gcd(m, m.derivative()).degree() != 0)
    throw NotSemisimple("matrix has a repeated minimal-polynomial factor");
  const auto roots = rational_roots(m);  // SplitFailure propagates

  Eigenstructure es;
  const std::size_t n = xs.dim();
  for (const auto& [value, mult] : roots) es.eigenvalues.push_back(value);

  Rational total_mult(0);
  for (std::size_t c = 0; c < es.eigenvalues.size(); ++c) {
    QMatrix proj = QMatrix::identity(n);
    Rational denom(1);
    for (std::size_t j = 0; j < es.eigenvalues.size(); ++j) {
      if (j == c) continue;
      proj = proj * (xs - QMatrix::scalar(n, es.eigenvalues[j]));
      denom *= es.eigenvalues[c] - es.eigenvalues[j];
    }
    proj *= Rational(1) / denom;
    const Rational mult = proj.trace();
    if (mult.get_den() != 1 || mult <= 0) throw Error("projection trace is not a positive integer");
    es.multiplicities.push_back(static_cast<unsigned>(mult.get_num().get_ui()));
    total_mult += mult;
    es.projections.push_back(std::move(proj));
  }
  if (total_mult != Rational(static_cast<long>(n))) throw Error("projection multiplicities do not sum to the dimension");
  return es;
}

}  // namespace lie
