#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lie/matrix.hpp"
#include "lie/subspace.hpp"

namespace lie {

/// Commutator ab - ba. Throws DimensionMismatch.
QMatrix bracket(const QMatrix& a, const QMatrix& b);

/// Structure constants over an ordered basis: [b_i, b_j] = sum_k c(i,j,k) b_k.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t size);

  std::size_t size() const { return size_; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const;
  Rational& at(std::size_t i, std::size_t j, std::size_t k);

  bool antisymmetric() const;
  bool jacobi() const;

  bool operator==(const StructureConstants& rhs) const = default;

 private:
  std::size_t size_;
  std::vector<Rational> c_;
};

/// A subspace of gl(n) certified closed under the bracket, carrying a
/// presentation basis (the construction order, e.g. named generators)
/// and its structure constants, both fixed at construction.
class LieSubalgebra {
 public:
  /// Keeps `basis` as the presentation basis; it must be linearly
  /// independent. Throws NotClosed when the span is not bracket-closed.
  static LieSubalgebra from_basis(std::vector<QMatrix> basis);

  /// Canonical RREF presentation basis.
  static LieSubalgebra from_space(Subspace space);

  std::size_t ambient_dim() const { return space_.ambient_dim(); }
  std::size_t dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }
  const std::vector<QMatrix>& basis() const { return basis_; }
  const StructureConstants& constants() const { return constants_; }

 private:
  LieSubalgebra(Subspace space, std::vector<QMatrix> basis, StructureConstants constants);
  Subspace space_;
  std::vector<QMatrix> basis_;
  StructureConstants constants_;
};

/// Checks all basis-pair brackets stay inside the span.
bool is_subalgebra(const Subspace& s);

/// Structure constants over the presentation basis (cached).
const StructureConstants& structure_constants(const LieSubalgebra& L);

/// Smallest bracket-closed subspace containing the generators:
/// adjoin all pairwise brackets, re-canonicalize, repeat to a fixed point.
LieSubalgebra generate_lie(const std::vector<QMatrix>& generators);

/// C^1 = L, C^{k+1} = [L, C^k]; the list ends with the first stable
/// term (zero for nilpotent algebras).
std::vector<Subspace> lower_central_series(const LieSubalgebra& L);

/// Least k with C^{k+1} = 0. Throws NotNilpotent when the series
/// stabilizes at a nonzero term.
unsigned nilindex(const LieSubalgebra& L);

bool is_nilpotent_algebra(const LieSubalgebra& L);

/// Nilpotent of maximal class: nilindex == dim - 1.
bool is_filiform(const LieSubalgebra& L);

/// Span of all basis-pair brackets.
Subspace derived_subalgebra(const LieSubalgebra& L);

/// {x in L : [x, y] = 0 for all y in L}, by an exact kernel solve.
Subspace center(const LieSubalgebra& L);

/// [L, s] contained in s.
bool is_ideal(const Subspace& s, const LieSubalgebra& L);

/// Outcome of the all-elements-nilpotent decision.
struct EngelResult {
  bool unipotent = false;
  /// Invertible F with F^{-1} b F strictly upper triangular for every
  /// basis element b; present exactly when unipotent.
  std::optional<QMatrix> flag;
  /// An element of the algebra that is not nilpotent; present exactly
  /// when not unipotent.
  std::optional<QMatrix> witness;
};

/// Decides whether every element of L is a nilpotent matrix: find a
/// common kernel vector of the basis, quotient, recurse.
EngelResult is_unipotent(const LieSubalgebra& L);

}  // namespace lie
