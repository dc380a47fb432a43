#include "lie/subspace.hpp"

#include "lie/errors.hpp"
#include "lie/linalg.hpp"

namespace lie {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {
  if (ambient_dim == 0) throw Error("ambient dimension must be at least 1");
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<QMatrix>& generators) {
  Subspace s(ambient_dim);
  if (generators.empty()) return s;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(generators.size());
  for (const QMatrix& g : generators) {
    if (g.dim() != ambient_dim) throw DimensionMismatch("span: generator of wrong size");
    rows.push_back(g.flatten());
  }
  const RrefResult R = rref(Mat::from_rows(std::move(rows)));
  s.basis_.reserve(R.rank);
  for (std::size_t i = 0; i < R.rank; ++i) s.basis_.push_back(QMatrix::unflatten(ambient_dim, R.reduced.row(i)));
  return s;
}

bool Subspace::contains(const QMatrix& x) const { return coordinates(x).has_value(); }

std::optional<std::vector<Rational>> Subspace::coordinates(const QMatrix& x) const {
  if (x.dim() != ambient_) throw DimensionMismatch("membership: wrong ambient dimension");
  std::vector<Rational> v = x.flatten();
  std::vector<Rational> coords(basis_.size(), Rational(0));
  // basis rows are RREF: coordinates are the entries at the pivots
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::vector<Rational> b = basis_[i].flatten();
    std::size_t piv = 0;
    while (b[piv] == 0) ++piv;
    const Rational f = v[piv];
    if (f == 0) continue;
    coords[i] = f;
    for (std::size_t j = piv; j < v.size(); ++j) v[j] -= f * b[j];
  }
  for (const Rational& r : v)
    if (r != 0) return std::nullopt;
  return coords;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum: ambient dimensions differ");
  std::vector<QMatrix> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), gens);
}

}  // namespace lie
