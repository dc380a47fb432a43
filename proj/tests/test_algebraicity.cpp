#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie/algebraicity.hpp"
#include "lie/catalog.hpp"
#include "lie/errors.hpp"
#include "lie/jordan.hpp"
#include "lie/subalgebra.hpp"

using namespace lie;

namespace {

QMatrix unit(std::size_t dim, std::size_t i, std::size_t j) {
  QMatrix m(dim);
  m.at(i, j) = 1;
  return m;
}

}  // namespace

TEST_CASE("the 3-dimensional family is refuted with a re-checkable witness") {
  for (const auto& [alpha, beta] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(1)}, {Rational(2), Rational(-1)}, {Rational(-3), Rational(5)}}) {
    const LieSubalgebra h = heisenberg_h(alpha, beta);
    const Verdict v = check_algebraic(h);
    REQUIRE(v.kind == VerdictKind::NotAlgebraic);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->element == h.basis()[0]);
    CHECK(v.witness->part == ClosureFailure::SemisimplePart);
    CHECK(h.space().contains(v.witness->element));
    CHECK_FALSE(h.space().contains(v.witness->outside));
    CHECK(v.witness->outside == jordan_decompose(h.basis()[0]).semisimple);
    CHECK(v.split_failures == 0);
  }
}

TEST_CASE("the 4-dimensional hull is closed on samples") {
  const LieSubalgebra m = hull_m(Rational(1), Rational(1));
  const Verdict v = check_algebraic(m, CheckOptions{64, 5, 3});
  CHECK(v.kind == VerdictKind::ClosedOnSamples);
  CHECK(v.samples_checked >= 64);
  CHECK(v.seed == 3);
}

TEST_CASE("a perfect algebra takes the derived-subalgebra fast path") {
  const LieSubalgebra sl2 = generate_lie({unit(2, 0, 1), unit(2, 1, 0)});
  CHECK(derived_subalgebra(sl2) == sl2.space());
  const Verdict v = check_algebraic(sl2);
  CHECK(v.kind == VerdictKind::PerfectHenceAlgebraic);
  CHECK(v.samples_checked == 0);
}

TEST_CASE("the filiform family is refuted") {
  const FiliformRep rep = filiform_rep(5, Rational(-2), Rational(1), Rational(1));
  const Verdict v = check_algebraic(rep.generated);
  REQUIRE(v.kind == VerdictKind::NotAlgebraic);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->element == rep.x1);
  CHECK(v.witness->part == ClosureFailure::SemisimplePart);
}

TEST_CASE("verdicts are deterministic in the seed") {
  const LieSubalgebra m = hull_m(Rational(2), Rational(-1));
  const Verdict a = check_algebraic(m, CheckOptions{16, 5, 7});
  const Verdict b = check_algebraic(m, CheckOptions{16, 5, 7});
  CHECK(a.kind == b.kind);
  CHECK(a.samples_checked == b.samples_checked);
  const Verdict c = check_algebraic(m, CheckOptions{16, 5, 8});
  CHECK(c.kind == VerdictKind::ClosedOnSamples);  // any seed closes
}

TEST_CASE("hull of the 3-dimensional family is the catalog 4-dimensional algebra") {
  for (const auto& [alpha, beta] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(1)}, {make_rational(1, 2), make_rational(1, 2)}}) {
    const LieSubalgebra h = heisenberg_h(alpha, beta);
    const HullReport report = algebraic_hull(h);
    CHECK(report.valid);
    CHECK(report.hull.dim() == 4);
    CHECK(report.hull.space() == hull_m(alpha, beta).space());
    REQUIRE(report.adjoined.size() == 1);
    CHECK(report.adjoined[0].reason == ClosureFailure::SemisimplePart);
    CHECK(report.adjoined[0].adjoined == x4(alpha, beta));
    CHECK(report.adjoined[0].source == h.basis()[0]);
    CHECK(report.verdict.kind == VerdictKind::ClosedOnSamples);
    // monotonicity
    for (const QMatrix& b : h.space().basis()) CHECK(report.hull.space().contains(b));
  }
}

TEST_CASE("hull is idempotent and a fixed point closes in one round") {
  const LieSubalgebra m = hull_m(Rational(1), Rational(1));
  const HullReport report = algebraic_hull(m);
  CHECK(report.valid);
  CHECK(report.rounds == 1);
  CHECK(report.adjoined.empty());
  CHECK(report.hull.space() == m.space());

  const LieSubalgebra h = heisenberg_h(Rational(1), Rational(1));
  const HullReport once = algebraic_hull(h);
  const HullReport twice = algebraic_hull(once.hull);
  CHECK(twice.hull.space() == once.hull.space());
  CHECK(twice.rounds == 1);
}

TEST_CASE("hull of the line through the first generator") {
  const LieSubalgebra h = heisenberg_h(Rational(1), Rational(1));
  const LieSubalgebra line = LieSubalgebra::from_basis({h.basis()[0]});
  const HullReport report = algebraic_hull(line);
  CHECK(report.valid);
  const JordanPair parts = jordan_decompose(h.basis()[0]);
  CHECK(report.hull.space().contains(parts.semisimple));
  CHECK(report.hull.space().contains(parts.nilpotent));
  CHECK(report.hull.space() == Subspace::span(4, {parts.semisimple, parts.nilpotent}));
}

TEST_CASE("splitting of the hull into nilradical and torus") {
  const Rational alpha(2), beta(-1);
  const LieSubalgebra m = hull_m(alpha, beta);
  const NilpotentDecomposition d = nilpotent_decomposition(m);
  REQUIRE(d.valid);
  CHECK(d.nil_part == nilradical_n1(alpha, beta));
  CHECK(d.nil_part.dim() == 3);
  CHECK(d.semisimple_part == torus_a1(alpha, beta));
  CHECK(d.semisimple_part.dim() == 1);
  CHECK(sum(d.nil_part, d.semisimple_part) == m.space());
  // centrality of the torus part, exactly
  for (const QMatrix& a : d.semisimple_part.basis())
    for (const QMatrix& y : m.space().basis()) CHECK(bracket(a, y).is_zero());
}

TEST_CASE("the 3-dimensional family admits no splitting") {
  const NilpotentDecomposition d = nilpotent_decomposition(heisenberg_h(Rational(1), Rational(1)));
  CHECK_FALSE(d.valid);
  CHECK(d.reason.find("semisimple component") != std::string::npos);
}

TEST_CASE("a unipotent algebra splits as everything plus zero") {
  const LieSubalgebra n1 = LieSubalgebra::from_space(nilradical_n1(Rational(1), Rational(1)));
  const NilpotentDecomposition d = nilpotent_decomposition(n1);
  REQUIRE(d.valid);
  CHECK(d.nil_part == n1.space());
  CHECK(d.semisimple_part.dim() == 0);
}

TEST_CASE("splitting rejects non-nilpotent algebras") {
  const LieSubalgebra sl2 = generate_lie({unit(2, 0, 1), unit(2, 1, 0)});
  CHECK_THROWS_AS(nilpotent_decomposition(sl2), NotNilpotentAlgebra);
}
