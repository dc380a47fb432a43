#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lie/matrix.hpp"

namespace lie {

/// Linear subspace of the n x n matrix space, stored as the unique RREF
/// basis over the row-major flattening. Two subspaces are equal exactly
/// when their basis lists are equal.
class Subspace {
 public:
  /// The zero subspace of gl(ambient_dim).
  explicit Subspace(std::size_t ambient_dim);

  static Subspace span(std::size_t ambient_dim, const std::vector<QMatrix>& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QMatrix>& basis() const { return basis_; }

  /// Membership by RREF residual. Throws DimensionMismatch.
  bool contains(const QMatrix& x) const;

  /// Coordinates of x in the canonical basis; nullopt when outside.
  std::optional<std::vector<Rational>> coordinates(const QMatrix& x) const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::size_t ambient_;
  std::vector<QMatrix> basis_;  // RREF rows, unflattened
};

/// Span of the union. Throws DimensionMismatch on different ambients.
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace lie
