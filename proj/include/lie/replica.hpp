#pragma once

#include <utility>

#include "lie/jordan.hpp"
#include "lie/lattice.hpp"
#include "lie/matrix.hpp"
#include "lie/subspace.hpp"

namespace lie {

/// The smallest algebraic subalgebra of gl(n) containing a matrix,
/// assembled from its two commuting components.
struct ReplicaResult {
  Subspace semisimple_replica;  // from the semisimple component
  Subspace nilpotent_replica;   // the line through the nilpotent component
  Subspace total;               // their sum
  IntegerLattice lattice;       // integer relations among the distinct eigenvalues
};

/// For a semisimple matrix with distinct rational eigenvalues l_1..l_d
/// and spectral projections P_1..P_d: the relation lattice is the
/// integer kernel of the row (l_1,...,l_d), and the result is
/// { sum mu_c P_c : mu rational, p . mu = 0 for every lattice vector p }.
/// Throws NotSemisimple or SplitFailure.
std::pair<Subspace, IntegerLattice> replica_semisimple(const QMatrix& xs);

/// The line through a nilpotent matrix (zero subspace at zero).
/// Throws NotNilpotent.
Subspace replica_nilpotent(const QMatrix& xn);

/// Two-step assembly through the additive decomposition.
/// Throws SplitFailure on an irrational spectrum.
ReplicaResult replica(const QMatrix& x);

/// Same, reusing an existing decomposition of x.
ReplicaResult replica(const JordanPair& parts);

}  // namespace lie
