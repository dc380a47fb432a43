#pragma once

#include <vector>

#include "lie/matrix.hpp"
#include "lie/poly.hpp"

namespace lie {

/// Additive decomposition x = semisimple + nilpotent with commuting
/// parts, both polynomials in x. Unique; the witness polynomials
/// certify the polynomial-in-x property.
struct JordanPair {
  QMatrix semisimple;
  QMatrix nilpotent;
  QPoly semisimple_witness;  // s with s(x) = semisimple
  QPoly nilpotent_witness;   // T - s
};

/// Newton iteration z <- z - f(z) g(z) modulo charpoly(x), where
/// f = squarefree_part(charpoly) and g inverts f' mod f. Total over
/// square rational matrices; needs no eigenvalues.
JordanPair jordan_decompose(const QMatrix& x);

/// Square-free minimal polynomial.
bool is_semisimple(const QMatrix& x);

/// x^n = 0, decided by repeated squaring.
bool is_nilpotent_matrix(const QMatrix& x);

/// Spectral projections of a semisimple matrix with rational spectrum:
/// sum of projections is the identity, they are orthogonal idempotents,
/// and sum(eigenvalue * projection) reconstructs the input.
struct Eigenstructure {
  std::vector<Rational> eigenvalues;    // distinct, ascending
  std::vector<unsigned> multiplicities;
  std::vector<QMatrix> projections;
};

/// Lagrange interpolation on the minimal polynomial's roots.
/// Throws NotSemisimple or SplitFailure.
Eigenstructure eigenstructure(const QMatrix& xs);

}  // namespace lie
