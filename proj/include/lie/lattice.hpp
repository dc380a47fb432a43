#pragma once

#include <cstddef>
#include <vector>

#include "lie/rational.hpp"

namespace lie {

/// Row-style Hermite normal form: pivots positive, pivot columns
/// strictly increasing, entries above a pivot reduced into [0, pivot).
/// Zero rows are dropped. The result is the canonical basis of the row
/// lattice of the input.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

/// Integer lattice in Z^d with its basis kept in Hermite normal form,
/// so lattice equality is basis equality.
class IntegerLattice {
 public:
  static IntegerLattice from_generators(std::size_t length, std::vector<std::vector<Integer>> generators);
  static IntegerLattice full(std::size_t length);  // all of Z^d
  static IntegerLattice zero(std::size_t length);

  std::size_t length() const { return length_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<Integer>>& basis() const { return basis_; }

  bool operator==(const IntegerLattice& rhs) const = default;

 private:
  IntegerLattice(std::size_t length, std::vector<std::vector<Integer>> hnf_basis);
  std::size_t length_;
  std::vector<std::vector<Integer>> basis_;
};

/// The full lattice {p in Z^d : row . p = 0 for every input row}.
/// Computed by clearing denominators and transposed HNF reduction with
/// a carried unimodular transform.
IntegerLattice integer_kernel(const std::vector<std::vector<Rational>>& rows, std::size_t length);

}  // namespace lie
