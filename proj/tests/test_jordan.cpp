#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie/catalog.hpp"
#include "lie/errors.hpp"
#include "lie/jordan.hpp"
#include "lie/linalg.hpp"
#include "lie/poly.hpp"
#include "lie/rng.hpp"
#include "lie/subspace.hpp"

using namespace lie;

namespace {

QMatrix from_strings(std::size_t dim, std::vector<std::vector<const char*>> rows) {
  QMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rational_from_string(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("decomposition of the first generator matches the closed-form matrices") {
  const LieSubalgebra h = heisenberg_h(Rational(1), Rational(1));
  const JordanPair parts = jordan_decompose(h.basis()[0]);

  const QMatrix expected_s = from_strings(4, {{"1", "1", "0", "1/2"},
                                              {"1", "1", "0", "1/2"},
                                              {"1", "1", "0", "1/2"},
                                              {"0", "0", "0", "0"}});
  const QMatrix expected_n = from_strings(4, {{"0", "0", "0", "1/2"},
                                              {"0", "0", "0", "-1/2"},
                                              {"0", "0", "0", "-1/2"},
                                              {"0", "0", "0", "0"}});
  CHECK(parts.semisimple == expected_s);
  CHECK(parts.nilpotent == expected_n);
  CHECK(parts.semisimple == x4(Rational(1), Rational(1)));
  // witness polynomials evaluate back to the components
  CHECK(parts.semisimple_witness.eval(h.basis()[0]) == parts.semisimple);
  CHECK(parts.nilpotent_witness.eval(h.basis()[0]) == parts.nilpotent);
}

TEST_CASE("nilpotent input decomposes as (0, x)") {
  QMatrix x(3);
  x.at(0, 1) = 5;
  x.at(1, 2) = make_rational(-2, 3);
  const JordanPair parts = jordan_decompose(x);
  CHECK(parts.semisimple.is_zero());
  CHECK(parts.nilpotent == x);
}

TEST_CASE("filiform generator has the closed-form semisimple component") {
  for (const auto& [n, a] : std::vector<std::pair<unsigned, Rational>>{
           {5, Rational(1)}, {6, Rational(-2)}, {7, make_rational(1, 3)}}) {
    const FiliformRep rep = filiform_rep(n, a, Rational(1), Rational(1));
    const JordanPair parts = jordan_decompose(rep.x1);
    const QMatrix expected =
        rep.x1.pow(n - 2) * (Rational(1) / rational_pow(Rational(2) * a, static_cast<long>(n) - 3));
    CHECK(parts.semisimple == expected);
    CHECK(minpoly(rep.x1) ==
          QPoly::monomial(n - 2, Rational(1)) * QPoly{Rational(-2) * a, Rational(1)});
  }
}

TEST_CASE("semisimple and nilpotent predicates") {
  const LieSubalgebra h = heisenberg_h(Rational(2), Rational(-1));
  const QMatrix x1_minus_x2 = h.basis()[0] - h.basis()[1];
  CHECK(is_nilpotent_matrix(x1_minus_x2));
  CHECK(is_semisimple(QMatrix::identity(4)));
  CHECK_FALSE(is_nilpotent_matrix(QMatrix::identity(4)));
  // the first generator is neither
  CHECK_FALSE(is_semisimple(h.basis()[0]));
  CHECK_FALSE(is_nilpotent_matrix(h.basis()[0]));
  CHECK(is_nilpotent_matrix(QMatrix(2)));
  CHECK(is_semisimple(QMatrix(2)));
}

TEST_CASE("eigenstructure of the rank-one idempotent-like component") {
  const QMatrix xs = x4(Rational(1), Rational(1));
  // oracle: xs^2 = 2 xs, so xs/2 is the projection onto the eigenvalue 2
  CHECK(xs * xs == Rational(2) * xs);
  const Eigenstructure es = eigenstructure(xs);
  REQUIRE(es.eigenvalues.size() == 2);
  CHECK(es.eigenvalues[0] == 0);
  CHECK(es.eigenvalues[1] == 2);
  CHECK(es.multiplicities[0] == 3);
  CHECK(es.multiplicities[1] == 1);
  CHECK(es.projections[1] == xs * make_rational(1, 2));

  // invariants
  CHECK(es.projections[0] + es.projections[1] == QMatrix::identity(4));
  CHECK((es.projections[0] * es.projections[1]).is_zero());
  CHECK(es.projections[0] * es.projections[0] == es.projections[0]);
  QMatrix rebuilt(4);
  for (std::size_t c = 0; c < es.eigenvalues.size(); ++c)
    rebuilt += es.eigenvalues[c] * es.projections[c];
  CHECK(rebuilt == xs);
}

TEST_CASE("eigenstructure of the identity and of a diagonal matrix") {
  const Eigenstructure one = eigenstructure(QMatrix::identity(3));
  REQUIRE(one.eigenvalues.size() == 1);
  CHECK(one.eigenvalues[0] == 1);
  CHECK(one.multiplicities[0] == 3);
  CHECK(one.projections[0] == QMatrix::identity(3));

  QMatrix d(3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 3;
  const Eigenstructure es = eigenstructure(d);
  REQUIRE(es.eigenvalues.size() == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(es.multiplicities[c] == 1);
    CHECK(es.projections[c].trace() == 1);
    QMatrix expected(3);
    expected.at(c, c) = 1;
    CHECK(es.projections[c] == expected);
  }
}

TEST_CASE("eigenstructure failure modes") {
  QMatrix jordan_block(2);
  jordan_block.at(0, 0) = 1;
  jordan_block.at(0, 1) = 1;
  jordan_block.at(1, 1) = 1;
  CHECK_THROWS_AS(eigenstructure(jordan_block), NotSemisimple);

  QMatrix rotation(2);
  rotation.at(0, 1) = -1;
  rotation.at(1, 0) = 1;
  CHECK(is_semisimple(rotation));
  CHECK_THROWS_AS(eigenstructure(rotation), SplitFailure);
}

TEST_CASE("decomposition properties on random conjugated seeds") {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 4);
    // block seed with rational eigenvalues
    QMatrix j(d);
    std::size_t pos = 0;
    while (pos < d) {
      const std::size_t block =
          1 + static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min<std::size_t>(d - pos, 2)) - 1));
      const Rational lambda = rng.rational(3, 2);
      for (std::size_t k = 0; k < block; ++k) {
        j.at(pos + k, pos + k) = lambda;
        if (k + 1 < block) j.at(pos + k, pos + k + 1) = 1;
      }
      pos += block;
    }
    QMatrix p = QMatrix::identity(d);
    for (std::size_t s = 0; s < 2 * d; ++s) {
      const std::size_t a = static_cast<std::size_t>(rng.integer(0, static_cast<long>(d) - 1));
      const std::size_t b = static_cast<std::size_t>(rng.integer(0, static_cast<long>(d) - 1));
      if (a == b) continue;
      QMatrix e = QMatrix::identity(d);
      e.at(a, b) = Rational(rng.integer(-2, 2));
      p = p * e;
    }
    const QMatrix p_inv = *inverse(p);
    const QMatrix x = p * j * p_inv;
    const JordanPair parts = jordan_decompose(x);

    CHECK(parts.semisimple + parts.nilpotent == x);
    CHECK(parts.semisimple * parts.nilpotent == parts.nilpotent * parts.semisimple);
    const QPoly mp = minpoly(parts.semisimple);
    CHECK(poly_gcd(mp, mp.derivative()).degree() == 0);
    CHECK(is_nilpotent_matrix(parts.nilpotent));
    CHECK(parts.nilpotent.trace() == 0);

    // both components lie in the span of the powers of x
    std::vector<QMatrix> powers;
    QMatrix pw = QMatrix::identity(d);
    for (std::size_t k = 0; k < d; ++k) {
      powers.push_back(pw);
      pw = pw * x;
    }
    const Subspace krylov = Subspace::span(d, powers);
    CHECK(krylov.contains(parts.semisimple));
    CHECK(krylov.contains(parts.nilpotent));

    // scaling equivariance
    Rational c = rng.rational(4, 3);
    if (c == 0) c = 1;
    const JordanPair scaled = jordan_decompose(c * x);
    CHECK(scaled.semisimple == c * parts.semisimple);
    CHECK(scaled.nilpotent == c * parts.nilpotent);
  }
}
