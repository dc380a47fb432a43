#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie/catalog.hpp"
#include "lie/errors.hpp"
#include "lie/jordan.hpp"
#include "lie/poly.hpp"
#include "lie/rng.hpp"
#include "lie/subalgebra.hpp"

using namespace lie;

namespace {

const std::vector<std::pair<Rational, Rational>> kPairs{
    {Rational(1), Rational(1)},
    {Rational(2), Rational(-1)},
    {make_rational(1, 2), make_rational(1, 2)},
    {Rational(-3), Rational(5)},
};

}  // namespace

TEST_CASE("3-dimensional family construction") {
  const LieSubalgebra h = heisenberg_h(Rational(1), Rational(1));
  CHECK(h.dim() == 3);
  // third row of the first generator carries the two parameters
  CHECK(h.basis()[0].at(2, 0) == 1);
  CHECK(h.basis()[0].at(2, 1) == 1);
  CHECK(h.basis()[0].at(0, 3) == 1);
  CHECK_THROWS_AS(heisenberg_h(Rational(1), Rational(-1)), ParamDomain);
  for (const auto& [alpha, beta] : kPairs) {
    const LieSubalgebra hh = heisenberg_h(alpha, beta);
    CHECK(structure_constants(hh) == model_filiform(3));
    CHECK(is_subalgebra(hh.space()));
  }
}

TEST_CASE("eigenvalue law of the 3-dimensional family") {
  Rng rng(71);
  for (const auto& [alpha, beta] : kPairs) {
    const LieSubalgebra h = heisenberg_h(alpha, beta);
    for (int t = 0; t < 50; ++t) {
      const Rational c1 = rng.rational(6, 4), c2 = rng.rational(6, 4), c3 = rng.rational(6, 4);
      const QMatrix x = c1 * h.basis()[0] + c2 * h.basis()[1] + c3 * h.basis()[2];
      const QPoly expected =
          QPoly::monomial(3, Rational(1)) * QPoly{Rational(-2) * (c1 + c2), Rational(1)};
      CHECK(charpoly(x) == expected);
    }
  }
}

TEST_CASE("hull family and its pieces") {
  for (const auto& [alpha, beta] : kPairs) {
    const LieSubalgebra h = heisenberg_h(alpha, beta);
    const LieSubalgebra m = hull_m(alpha, beta);
    CHECK(m.dim() == 4);
    CHECK(nilradical_n1(alpha, beta).dim() == 3);
    CHECK(torus_a1(alpha, beta).dim() == 1);
    CHECK(is_subalgebra(m.space()));

    // the adjoined generator is the semisimple component of the first one
    CHECK(x4(alpha, beta) == jordan_decompose(h.basis()[0]).semisimple);
    CHECK(sum(h.space(), Subspace::span(4, {x4(alpha, beta)})) == m.space());

    // the nilradical equals the span of the generator differences
    CHECK(nilradical_n1(alpha, beta) ==
          Subspace::span(4, {h.basis()[0] - x4(alpha, beta), h.basis()[1] - x4(alpha, beta),
                             h.basis()[2]}));
    CHECK(is_unipotent(LieSubalgebra::from_space(nilradical_n1(alpha, beta))).unipotent);

    // torus generator is semisimple and central in the hull
    CHECK(is_semisimple(x4(alpha, beta)));
    for (const QMatrix& y : m.basis()) CHECK(bracket(x4(alpha, beta), y).is_zero());
  }
}

TEST_CASE("nilpotency locus of the hull") {
  Rng rng(73);
  for (const auto& [alpha, beta] : kPairs) {
    const LieSubalgebra m = hull_m(alpha, beta);
    for (int t = 0; t < 30; ++t) {
      const Rational c1 = rng.rational(6, 3), c2 = rng.rational(6, 3), c3 = rng.rational(6, 3),
                     c4 = rng.rational(6, 3);
      const QMatrix x =
          c1 * m.basis()[0] + c2 * m.basis()[1] + c3 * m.basis()[2] + c4 * m.basis()[3];
      CHECK(is_nilpotent_matrix(x) == (c1 + c2 + c4 == 0));
    }
  }
}

TEST_CASE("filiform family frozen examples") {
  const FiliformRep rep = filiform_rep(5, Rational(1), Rational(1), Rational(1));
  CHECK(minpoly(rep.x1) == QPoly::monomial(3, Rational(1)) * QPoly{Rational(-2), Rational(1)});
  const JordanPair parts = jordan_decompose(rep.x1);
  CHECK(parts.semisimple == rep.x1.pow(3) * make_rational(1, 4));
  CHECK_FALSE(rep.generated.space().contains(parts.semisimple));
  CHECK(rep.generated.space().contains(rep.x1));
  CHECK(rep.generated.space().contains(rep.x2));
}

TEST_CASE("filiform parameter domain") {
  CHECK_THROWS_AS(filiform_rep(4, Rational(0), Rational(1), Rational(1)), ParamDomain);
  CHECK_THROWS_AS(filiform_rep(2, Rational(1), Rational(1), Rational(1)), ParamDomain);
  try {
    filiform_rep(3, Rational(1), Rational(1), Rational(1));
    CHECK(false);
  } catch (const ParamDomain& e) {
    CHECK(std::string(e.what()).find("heisenberg4") != std::string::npos);
  }
}

TEST_CASE("filiform report is deterministic and itemized for every sweep parameter") {
  for (const auto& [alpha, beta] : kPairs) {
    for (unsigned n = 4; n <= 7; ++n) {
      const FiliformRep a = filiform_rep(n, Rational(1), alpha, beta);
      const FiliformRep b = filiform_rep(n, Rational(1), alpha, beta);
      REQUIRE(a.report.items.size() == b.report.items.size());
      for (std::size_t i = 0; i < a.report.items.size(); ++i) {
        CHECK(a.report.items[i].what == b.report.items[i].what);
        CHECK(a.report.items[i].ok == b.report.items[i].ok);
        CHECK(a.report.items[i].detail == b.report.items[i].detail);
        CHECK_FALSE(a.report.items[i].what.empty());
        CHECK_FALSE(a.report.items[i].detail.empty());
      }
      CHECK(a.report.chain_length == n);
      CHECK(a.report.generated_dim == n);
    }
  }
}

TEST_CASE("abstract filiform model") {
  const StructureConstants l3 = model_filiform(3);
  CHECK(l3 == structure_constants(heisenberg_h(Rational(1), Rational(1))));

  const StructureConstants l4 = model_filiform(4);
  CHECK(l4.at(0, 1, 2) == 1);
  CHECK(l4.at(0, 2, 3) == 1);
  Rational nonzero_count(0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        if (l4.at(i, j, k) != 0) nonzero_count += 1;
  CHECK(nonzero_count == 4);  // two relations and their antisymmetric mirrors

  for (unsigned n = 3; n <= 9; ++n) {
    const StructureConstants model = model_filiform(n);
    CHECK(model.antisymmetric());
    CHECK(model.jacobi());
  }
  CHECK_THROWS_AS(model_filiform(2), ParamDomain);
}
