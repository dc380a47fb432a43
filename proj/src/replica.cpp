#include "lie/replica.hpp"

#include "lie/errors.hpp"
#include "lie/linalg.hpp"
#include "lie/poly.hpp"

namespace lie {

std::pair<Subspace, IntegerLattice> replica_semisimple(const QMatrix& xs) {
  const Eigenstructure es = eigenstructure(xs);  // NotSemisimple / SplitFailure
  const std::size_t d = es.eigenvalues.size();
  const std::size_t n = xs.dim();

  const IntegerLattice lattice = integer_kernel({es.eigenvalues}, d);

  // rational kernel of the relation rows: admissible eigenvalue tuples mu
  std::vector<std::vector<Rational>> mu_basis;
  if (lattice.rank() == 0) {
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> e(d, Rational(0));
      e[i] = 1;
      mu_basis.push_back(std::move(e));
    }
  } else {
    Mat rows(lattice.rank(), d);
    for (std::size_t i = 0; i < lattice.rank(); ++i)
      for (std::size_t j = 0; j < d; ++j) rows(i, j) = Rational(lattice.basis()[i][j]);
    mu_basis = kernel(rows);
  }

  std::vector<QMatrix> gens;
  for (const auto& mu : mu_basis) {
    QMatrix y(n);
    for (std::size_t c = 0; c < d; ++c)
      if (mu[c] != 0) y += mu[c] * es.projections[c];
    gens.push_back(std::move(y));
  }
  return {Subspace::span(n, gens), lattice};
}

Subspace replica_nilpotent(const QMatrix& xn) {
  if (!is_nilpotent_matrix(xn)) throw NotNilpotent("replica of a non-nilpotent matrix");
  return Subspace::span(xn.dim(), {xn});
}

ReplicaResult replica(const JordanPair& parts) {
  auto [semi, lattice] = replica_semisimple(parts.semisimple);
  Subspace nil = replica_nilpotent(parts.nilpotent);
  Subspace total = sum(semi, nil);
  return ReplicaResult{std::move(semi), std::move(nil), std::move(total), std::move(lattice)};
}

ReplicaResult replica(const QMatrix& x) { return replica(jordan_decompose(x)); }

}  // namespace lie
