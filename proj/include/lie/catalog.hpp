#pragma once

#include <string>
#include <vector>

#include "lie/matrix.hpp"
#include "lie/subalgebra.hpp"
#include "lie/subspace.hpp"

namespace lie {

// Exact constructors for the bundled worked examples, parameterized by
// their free rational constants. Every constructor validates its
// parameter domain and self-verifies its defining bracket relations.

/// 3-dimensional nilpotent subalgebra of gl(4) with presentation basis
/// X1, X2, X3 and relations [X1,X2]=X3, [X1,X3]=[X2,X3]=0.
/// Requires alpha + beta != 0.
LieSubalgebra heisenberg_h(const Rational& alpha, const Rational& beta);

/// The diagonalizable matrix adjoined to heisenberg_h by its hull;
/// equals the semisimple component of X1.
QMatrix x4(const Rational& alpha, const Rational& beta);

/// 4-dimensional algebra spanned by X1..X4; X4 is central in it.
LieSubalgebra hull_m(const Rational& alpha, const Rational& beta);

/// The 3-dimensional subspace of nilpotent elements of hull_m.
Subspace nilradical_n1(const Rational& alpha, const Rational& beta);

/// The line through X4 (all diagonalizable elements of hull_m).
Subspace torus_a1(const Rational& alpha, const Rational& beta);

/// Abstract n-dimensional filiform model: [b_1, b_i] = b_{i+1} for
/// i = 2..n-1, all other brackets zero. Requires n >= 3.
StructureConstants model_filiform(unsigned n);

struct ComparisonItem {
  std::string what;
  bool ok;
  std::string detail;
};

/// Deterministic, fully itemized account of how the generated algebra
/// compares with the filiform model relations; discrepancies are
/// reported, never patched.
struct ComparisonReport {
  std::vector<ComparisonItem> items;
  bool all_ok = false;
  std::size_t chain_length = 0;   // number of nonzero chain elements X1, X2, ...
  std::size_t generated_dim = 0;  // dimension of the bracket closure of {X1, X2}
};

struct FiliformRep {
  QMatrix x1, x2;
  LieSubalgebra generated;  // bracket closure of {x1, x2}
  ComparisonReport report;
};

/// The two (n+1) x (n+1) generator matrices with the bracket chain
/// X_i = [X1, X_{i-1}], their closure, and the relation report.
/// Requires n >= 4 and a != 0; n = 3 points at heisenberg_h.
FiliformRep filiform_rep(unsigned n, const Rational& a, const Rational& alpha, const Rational& beta);

}  // namespace lie
