#include "lie/subalgebra.hpp"

#include <utility>

#include "lie/errors.hpp"
#include "lie/jordan.hpp"
#include "lie/linalg.hpp"
#include "lie/rng.hpp"

namespace lie {

QMatrix bracket(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("bracket: sizes differ");
  return a * b - b * a;
}

StructureConstants::StructureConstants(std::size_t size)
    : size_(size), c_(size * size * size, Rational(0)) {}

const Rational& StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
  return c_[(i * size_ + j) * size_ + k];
}

Rational& StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) {
  return c_[(i * size_ + j) * size_ + k];
}

bool StructureConstants::antisymmetric() const {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < size_; ++k)
        if (at(i, j, k) != -at(j, i, k)) return false;
  return true;
}

bool StructureConstants::jacobi() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      for (std::size_t k = j + 1; k < size_; ++k) {
        for (std::size_t l = 0; l < size_; ++l) {
          Rational acc(0);
          for (std::size_t m = 0; m < size_; ++m) {
            acc += at(i, j, m) * at(m, k, l);
            acc += at(j, k, m) * at(m, i, l);
            acc += at(k, i, m) * at(m, j, l);
          }
          if (acc != 0) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Coordinates of every pairwise bracket in the given basis, or throws
// NotClosed naming the first offending pair.
StructureConstants solve_constants(const std::vector<QMatrix>& basis, const Subspace& space) {
  const std::size_t m = basis.size();
  StructureConstants cc(m);
  if (m == 0) return cc;
  const std::size_t flat = space.ambient_dim() * space.ambient_dim();

  Mat cols(flat, m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::vector<Rational> v = basis[k].flatten();
    for (std::size_t r = 0; r < flat; ++r) cols(r, k) = v[r];
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  Mat rhs(flat, pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const std::vector<Rational> v = bracket(basis[pairs[p].first], basis[pairs[p].second]).flatten();
    for (std::size_t r = 0; r < flat; ++r) rhs(r, p) = v[r];
  }
  const auto solutions = solve_columns(cols, rhs);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& [i, j] = pairs[p];
    if (!solutions[p])
      throw NotClosed("bracket of basis elements " + std::to_string(i + 1) + " and " +
                      std::to_string(j + 1) + " leaves the span");
    for (std::size_t k = 0; k < m; ++k) {
      cc.at(i, j, k) = (*solutions[p])[k];
      cc.at(j, i, k) = -(*solutions[p])[k];
    }
  }
  return cc;
}

}  // namespace

LieSubalgebra::LieSubalgebra(Subspace space, std::vector<QMatrix> basis, StructureConstants constants)
    : space_(std::move(space)), basis_(std::move(basis)), constants_(std::move(constants)) {}

LieSubalgebra LieSubalgebra::from_basis(std::vector<QMatrix> basis) {
  if (basis.empty()) throw Error("subalgebra needs at least one basis element (use the zero matrix)");
  Subspace space = Subspace::span(basis[0].dim(), basis);
  // drop zero generators (a zero algebra keeps an empty basis)
  std::vector<QMatrix> kept;
  for (const QMatrix& b : basis)
    if (!b.is_zero()) kept.push_back(b);
  if (kept.size() != space.dim()) throw Error("presentation basis is linearly dependent");
  StructureConstants cc = solve_constants(kept, space);
  return LieSubalgebra(std::move(space), std::move(kept), std::move(cc));
}

LieSubalgebra LieSubalgebra::from_space(Subspace space) {
  std::vector<QMatrix> basis = space.basis();
  StructureConstants cc = solve_constants(basis, space);
  return LieSubalgebra(std::move(space), std::move(basis), std::move(cc));
}

bool is_subalgebra(const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(bracket(b[i], b[j]))) return false;
  return true;
}

const StructureConstants& structure_constants(const LieSubalgebra& L) { return L.constants(); }

LieSubalgebra generate_lie(const std::vector<QMatrix>& generators) {
  if (generators.empty()) throw Error("generate_lie needs at least one generator");
  const std::size_t n = generators[0].dim();
  Subspace space = Subspace::span(n, generators);
  while (true) {
    std::vector<QMatrix> found;
    Subspace working = space;
    const auto& basis = space.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        QMatrix br = bracket(basis[i], basis[j]);
        if (br.is_zero() || working.contains(br)) continue;
        working = sum(working, Subspace::span(n, {br}));
        found.push_back(std::move(br));
      }
    }
    if (found.empty()) break;
    space = std::move(working);  // dimension grew; at most n^2 rounds
  }
  return LieSubalgebra::from_space(std::move(space));
}

std::vector<Subspace> lower_central_series(const LieSubalgebra& L) {
  std::vector<Subspace> series{L.space()};
  while (true) {
    const Subspace& current = series.back();
    std::vector<QMatrix> gens;
    for (const QMatrix& x : L.space().basis())
      for (const QMatrix& c : current.basis()) {
        QMatrix br = bracket(x, c);
        if (!br.is_zero()) gens.push_back(std::move(br));
      }
    Subspace next = Subspace::span(L.ambient_dim(), gens);
    if (next == current) break;  // stabilized without reaching zero
    const bool done = next.dim() == 0;
    series.push_back(std::move(next));
    if (done) break;
  }
  return series;
}

unsigned nilindex(const LieSubalgebra& L) {
  const std::vector<Subspace> series = lower_central_series(L);
  if (series.back().dim() != 0)
    throw NotNilpotent("lower central series stabilizes at a nonzero term");
  return static_cast<unsigned>(series.size() - 1);
}

bool is_nilpotent_algebra(const LieSubalgebra& L) {
  return lower_central_series(L).back().dim() == 0;
}

bool is_filiform(const LieSubalgebra& L) {
  if (!is_nilpotent_algebra(L)) return false;
  return nilindex(L) + 1 == L.dim();
}

Subspace derived_subalgebra(const LieSubalgebra& L) {
  std::vector<QMatrix> gens;
  const auto& b = L.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      QMatrix br = bracket(b[i], b[j]);
      if (!br.is_zero()) gens.push_back(std::move(br));
    }
  return Subspace::span(L.ambient_dim(), gens);
}

Subspace center(const LieSubalgebra& L) {
  const auto& b = L.space().basis();
  const std::size_t m = b.size();
  if (m == 0) return L.space();
  const std::size_t flat = L.ambient_dim() * L.ambient_dim();
  // unknowns t_i for x = sum t_i b_i; equations [x, b_j] = 0 for all j
  Mat system(flat * m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const std::vector<Rational> v = bracket(b[i], b[j]).flatten();
      for (std::size_t r = 0; r < flat; ++r) system(j * flat + r, i) = v[r];
    }
  std::vector<QMatrix> gens;
  for (const auto& t : kernel(system)) {
    QMatrix x(L.ambient_dim());
    for (std::size_t i = 0; i < m; ++i)
      if (t[i] != 0) x += t[i] * b[i];
    gens.push_back(std::move(x));
  }
  return Subspace::span(L.ambient_dim(), gens);
}

bool is_ideal(const Subspace& s, const LieSubalgebra& L) {
  for (const QMatrix& x : L.space().basis())
    for (const QMatrix& v : s.basis())
      if (!s.contains(bracket(x, v))) return false;
  return true;
}

namespace {

// Completes v (nonzero, length m) to an invertible m x m matrix whose
// first column is v, the rest standard basis vectors.
QMatrix complete_basis(const std::vector<Rational>& v) {
  const std::size_t m = v.size();
  std::size_t lead = m;
  for (std::size_t i = 0; i < m; ++i)
    if (v[i] != 0) {
      lead = i;
      break;
    }
  QMatrix s(m);
  for (std::size_t i = 0; i < m; ++i) s.at(i, 0) = v[i];
  std::size_t col = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == lead) continue;  // e_lead is dependent on v and the others
    s.at(i, col++) = 1;
  }
  return s;
}

QMatrix random_combination(Rng& rng, const std::vector<QMatrix>& basis, long bound) {
  QMatrix x(basis[0].dim());
  for (const QMatrix& b : basis) {
    const long c = rng.integer(-bound, bound);
    if (c != 0) x += Rational(c) * b;
  }
  return x;
}

// A non-nilpotent element is guaranteed to exist here; the nilpotent
// locus is cut out by polynomial equations, so small integer
// coefficient vectors already escape it.
QMatrix find_non_nilpotent(const LieSubalgebra& L) {
  const auto& basis = L.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      QMatrix x = basis[i] + basis[j];
      if (!is_nilpotent_matrix(x)) return x;
    }
  Rng rng(0x6e67656cU);
  for (long bound = 1; bound <= 9; bound += 2)
    for (int tries = 0; tries < 400; ++tries) {
      QMatrix x = random_combination(rng, basis, bound);
      if (!x.is_zero() && !is_nilpotent_matrix(x)) return x;
    }
  // exhaustive grid over {0..n}^dim when small enough
  const std::size_t n = L.ambient_dim();
  double combos = 1;
  for (std::size_t k = 0; k < basis.size() && combos < 3e5; ++k) combos *= static_cast<double>(n + 1);
  if (combos < 3e5) {
    std::vector<std::size_t> c(basis.size(), 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < c.size() && c[pos] == n) c[pos++] = 0;
      if (pos == c.size()) break;
      ++c[pos];
      QMatrix x(n);
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (c[k] != 0) x += Rational(static_cast<long>(c[k])) * basis[k];
      if (!is_nilpotent_matrix(x)) return x;
    }
  }
  throw Error("no non-nilpotent witness found despite missing common kernel");
}

}  // namespace

EngelResult is_unipotent(const LieSubalgebra& L) {
  for (const QMatrix& b : L.basis())
    if (!is_nilpotent_matrix(b)) return EngelResult{false, std::nullopt, b};

  const std::size_t n = L.ambient_dim();
  if (L.dim() == 0) return EngelResult{true, QMatrix::identity(n), std::nullopt};

  std::vector<QMatrix> blocks = L.basis();
  QMatrix transform = QMatrix::identity(n);  // current coords -> original
  std::size_t handled = 0;                   // flag vectors found so far

  while (handled < n) {
    const std::size_t m = n - handled;
    // common kernel of the active blocks
    Mat stacked(blocks.size() * m, m);
    for (std::size_t t = 0; t < blocks.size(); ++t)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) stacked(t * m + i, j) = blocks[t].at(handled + i, handled + j);
    const auto null_basis = kernel(stacked);
    if (null_basis.empty())
      return EngelResult{false, std::nullopt, find_non_nilpotent(L)};

    // change basis inside the active block so the kernel vector leads it
    const QMatrix small = complete_basis(null_basis.front());
    QMatrix full = QMatrix::identity(n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) full.at(handled + i, handled + j) = small.at(i, j);
    const auto full_inv = inverse(full);
    for (QMatrix& b : blocks) b = *full_inv * b * full;
    transform = transform * full;
    ++handled;
  }
  return EngelResult{true, transform, std::nullopt};
}

}  // namespace lie
