#include "lie/verify.hpp"

#include <algorithm>
#include <sstream>

#include "lie/algebraicity.hpp"
#include "lie/catalog.hpp"
#include "lie/errors.hpp"
#include "lie/jordan.hpp"
#include "lie/jsonio.hpp"
#include "lie/linalg.hpp"
#include "lie/poly.hpp"
#include "lie/replica.hpp"
#include "lie/rng.hpp"

namespace lie {

namespace {

const std::vector<std::pair<Rational, Rational>>& parameter_pairs() {
  static const std::vector<std::pair<Rational, Rational>> pairs{
      {Rational(1), Rational(1)},
      {Rational(2), Rational(-1)},
      {make_rational(1, 2), make_rational(1, 2)},
      {Rational(-3), Rational(5)},
  };
  return pairs;
}

const std::vector<Rational>& a_values() {
  static const std::vector<Rational> values{Rational(1), Rational(-2), make_rational(1, 3)};
  return values;
}

constexpr unsigned kFiliformLow = 4, kFiliformHigh = 9;

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1));
}

std::string pair_label(const Rational& alpha, const Rational& beta) {
  return "(alpha,beta)=(" + rational_to_string(alpha) + "," + rational_to_string(beta) + ")";
}

// Closed form of the nilpotent component of the first generator.
QMatrix expected_x1_nilpotent(const Rational& alpha, const Rational& beta) {
  QMatrix m(4);
  const Rational diff = (alpha - beta) / Rational(2);
  m.at(0, 3) = make_rational(1, 2);
  m.at(1, 3) = make_rational(-1, 2);
  m.at(2, 0) = diff;
  m.at(2, 1) = -diff;
  m.at(2, 3) = -(alpha + beta) / Rational(4);
  return m;
}

using Failure = std::ostringstream;

ClaimResult claim_refutation(std::uint64_t seed) {
  ClaimResult r{"1", "the 3-dimensional gl(4) family is refuted with a certified witness and the exact closed-form decomposition", false, ""};
  for (const auto& [alpha, beta] : parameter_pairs()) {
    const LieSubalgebra h = heisenberg_h(alpha, beta);
    const Verdict v = check_algebraic(h, CheckOptions{32, 5, seed});
    if (v.kind != VerdictKind::NotAlgebraic || !v.witness) {
      r.detail = pair_label(alpha, beta) + ": expected a refutation";
      return r;
    }
    const Witness& w = *v.witness;
    if (w.part != ClosureFailure::SemisimplePart) {
      r.detail = pair_label(alpha, beta) + ": witness failure is not the semisimple part";
      return r;
    }
    if (!h.space().contains(w.element) || h.space().contains(w.outside)) {
      r.detail = pair_label(alpha, beta) + ": witness does not re-verify";
      return r;
    }
    const JordanPair parts = jordan_decompose(h.basis()[0]);
    if (parts.semisimple != x4(alpha, beta) || parts.nilpotent != expected_x1_nilpotent(alpha, beta)) {
      r.detail = pair_label(alpha, beta) + ": decomposition differs from the closed-form matrices";
      return r;
    }
  }
  r.passed = true;
  r.detail = "4 parameter pairs, witnesses re-verified, decompositions exact";
  return r;
}

ClaimResult claim_hull(std::uint64_t seed) {
  ClaimResult r{"2", "the hull of the refuted family is the catalog 4-dimensional algebra, one semisimple adjunction, closed on samples", false, ""};
  for (const auto& [alpha, beta] : parameter_pairs()) {
    const LieSubalgebra h = heisenberg_h(alpha, beta);
    const HullReport report = algebraic_hull(h, HullOptions{32, 5, seed, 16});
    if (!report.valid || report.hull.dim() != 4) {
      r.detail = pair_label(alpha, beta) + ": hull invalid or of wrong dimension";
      return r;
    }
    if (report.hull.space() != hull_m(alpha, beta).space()) {
      r.detail = pair_label(alpha, beta) + ": hull differs from the catalog algebra";
      return r;
    }
    std::size_t semisimple_adjunctions = 0;
    bool adjunction_is_x4 = true;
    for (const Adjunction& a : report.adjoined)
      if (a.reason == ClosureFailure::SemisimplePart) {
        ++semisimple_adjunctions;
        adjunction_is_x4 = adjunction_is_x4 && (a.adjoined == x4(alpha, beta));
      }
    if (semisimple_adjunctions != 1 || !adjunction_is_x4) {
      r.detail = pair_label(alpha, beta) + ": adjunction log does not show exactly one semisimple adjunction equal to the central generator";
      return r;
    }
    const Verdict v = check_algebraic(hull_m(alpha, beta), CheckOptions{64, 5, seed});
    if (v.kind != VerdictKind::ClosedOnSamples || v.samples_checked < 64) {
      r.detail = pair_label(alpha, beta) + ": hull is not closed on >= 64 samples";
      return r;
    }
  }
  r.passed = true;
  r.detail = "hulls match exactly; adjunction logs minimal; closure verified on >= 64 samples";
  return r;
}

ClaimResult claim_splitting(std::uint64_t) {
  ClaimResult r{"3", "the 4-dimensional hull splits as nilradical plus central torus; the refuted family does not split", false, ""};
  for (const auto& [alpha, beta] : parameter_pairs()) {
    const NilpotentDecomposition dm = nilpotent_decomposition(hull_m(alpha, beta));
    if (!dm.valid || dm.nil_part != nilradical_n1(alpha, beta) || dm.nil_part.dim() != 3 ||
        dm.semisimple_part != torus_a1(alpha, beta) || dm.semisimple_part.dim() != 1) {
      r.detail = pair_label(alpha, beta) + ": splitting of the hull is wrong";
      return r;
    }
    const NilpotentDecomposition dh = nilpotent_decomposition(heisenberg_h(alpha, beta));
    if (dh.valid || dh.reason.empty()) {
      r.detail = pair_label(alpha, beta) + ": the refuted family unexpectedly splits";
      return r;
    }
  }
  r.passed = true;
  r.detail = "splittings exact (dims 3 + 1); non-splitting case reports its reason";
  return r;
}

ClaimResult claim_loci(std::uint64_t seed) {
  ClaimResult r{"4", "nilpotency loci: coordinate sum zero in the 3-dimensional family, first-two-plus-last zero in its hull", false, ""};
  for (const auto& [alpha, beta] : parameter_pairs()) {
    const LieSubalgebra h = heisenberg_h(alpha, beta);
    const LieSubalgebra m = hull_m(alpha, beta);
    Rng rng(mix(seed, 4));
    for (int t = 0; t < 50; ++t) {
      const Rational c1 = rng.rational(9, 5), c2 = rng.rational(9, 5), c3 = rng.rational(9, 5),
                     c4 = rng.rational(9, 5);
      // generic draw and its on-locus projection, both directions of the iff
      const QMatrix x = c1 * h.basis()[0] + c2 * h.basis()[1] + c3 * h.basis()[2];
      if (is_nilpotent_matrix(x) != (c1 + c2 == 0)) {
        r.detail = pair_label(alpha, beta) + ": locus failure in the 3-dimensional family";
        return r;
      }
      const QMatrix x_on = c1 * h.basis()[0] - c1 * h.basis()[1] + c3 * h.basis()[2];
      if (!is_nilpotent_matrix(x_on)) {
        r.detail = pair_label(alpha, beta) + ": on-locus element is not nilpotent";
        return r;
      }
      const QMatrix y = c1 * m.basis()[0] + c2 * m.basis()[1] + c3 * m.basis()[2] + c4 * m.basis()[3];
      if (is_nilpotent_matrix(y) != (c1 + c2 + c4 == 0)) {
        r.detail = pair_label(alpha, beta) + ": locus failure in the hull";
        return r;
      }
      const QMatrix y_on = c1 * m.basis()[0] + c2 * m.basis()[1] + c3 * m.basis()[2] -
                           (c1 + c2) * m.basis()[3];
      if (!is_nilpotent_matrix(y_on)) {
        r.detail = pair_label(alpha, beta) + ": on-locus element of the hull is not nilpotent";
        return r;
      }
    }
  }
  r.passed = true;
  r.detail = "50 seeded coordinate vectors per parameter pair, both loci exact in both directions";
  return r;
}

ClaimResult claim_filiform_family(std::uint64_t seed) {
  ClaimResult r{"5", "filiform family: minimal polynomial, closed-form semisimple component, escape from the algebra, refutation", false, ""};
  const Rational alpha(1), beta(1);
  for (unsigned n = kFiliformLow; n <= kFiliformHigh; ++n) {
    for (const Rational& a : a_values()) {
      std::ostringstream label;
      label << "(n,a)=(" << n << "," << rational_to_string(a) << ")";
      const FiliformRep rep = filiform_rep(n, a, alpha, beta);
      const QPoly expected_min = QPoly::monomial(n - 2, Rational(1)) * QPoly{Rational(-2) * a, Rational(1)};
      if (minpoly(rep.x1) != expected_min) {
        r.detail = label.str() + ": minimal polynomial mismatch";
        return r;
      }
      const JordanPair parts = jordan_decompose(rep.x1);
      const QMatrix expected_s =
          rep.x1.pow(n - 2) * (Rational(1) / rational_pow(Rational(2) * a, static_cast<long>(n) - 3));
      if (parts.semisimple != expected_s) {
        r.detail = label.str() + ": semisimple component differs from the closed form";
        return r;
      }
      if (rep.generated.space().contains(parts.semisimple)) {
        r.detail = label.str() + ": semisimple component does not escape the algebra";
        return r;
      }
      const Verdict v = check_algebraic(rep.generated, CheckOptions{32, 5, seed});
      if (v.kind != VerdictKind::NotAlgebraic) {
        r.detail = label.str() + ": expected a refutation";
        return r;
      }
    }
  }
  r.passed = true;
  r.detail = "18 (n,a) combinations at (alpha,beta)=(1,1), all exact";
  return r;
}

ClaimResult claim_filiform_report(std::uint64_t) {
  ClaimResult r{"6", "filiform relation report is deterministic and fully itemized", false, ""};
  for (const auto& [alpha, beta] : parameter_pairs()) {
    for (unsigned n = kFiliformLow; n <= kFiliformHigh; ++n) {
      const FiliformRep first = filiform_rep(n, Rational(1), alpha, beta);
      const FiliformRep second = filiform_rep(n, Rational(1), alpha, beta);
      const std::string a_dump = jsonio::to_json(first.report).dump();
      const std::string b_dump = jsonio::to_json(second.report).dump();
      std::ostringstream label;
      label << pair_label(alpha, beta) << " n=" << n;
      if (a_dump != b_dump) {
        r.detail = label.str() + ": report is not reproducible";
        return r;
      }
      if (first.report.items.empty()) {
        r.detail = label.str() + ": report has no items";
        return r;
      }
      for (const ComparisonItem& item : first.report.items)
        if (item.what.empty() || item.detail.empty()) {
          r.detail = label.str() + ": report item is not itemized";
          return r;
        }
    }
  }
  r.passed = true;
  r.detail = "reports byte-identical across rebuilds and fully itemized for every parameter set";
  return r;
}

QMatrix shear_conjugator(Rng& rng, std::size_t d) {
  QMatrix p = QMatrix::identity(d);
  const std::size_t shears = 2 * d;
  for (std::size_t s = 0; s < shears; ++s) {
    const std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(d) - 1));
    const std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(d) - 1));
    const long c = rng.integer(-2, 2);
    if (i == j || c == 0) continue;
    QMatrix e = QMatrix::identity(d);
    e.at(i, j) = Rational(c);
    p = p * e;
  }
  return p;
}

ClaimResult claim_jordan_suite(std::uint64_t seed) {
  ClaimResult r{"7", "additive decomposition property suite on 200 conjugated block seeds (dims 2..6)", false, ""};
  Rng rng(mix(seed, 7));
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 5);
    // random block form with rational eigenvalues
    QMatrix j(d);
    std::size_t pos = 0;
    Rational eig_sum(0);
    while (pos < d) {
      const std::size_t remaining = d - pos;
      const std::size_t block =
          1 + static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min<std::size_t>(remaining, 3)) - 1));
      const Rational lambda = rng.rational(4, 3);
      for (std::size_t k = 0; k < block; ++k) {
        j.at(pos + k, pos + k) = lambda;
        if (k + 1 < block) j.at(pos + k, pos + k + 1) = 1;
      }
      eig_sum += Rational(static_cast<long>(block)) * lambda;
      pos += block;
    }
    QMatrix diag(d);
    for (std::size_t k = 0; k < d; ++k) diag.at(k, k) = j.at(k, k);

    const QMatrix p = shear_conjugator(rng, d);
    const QMatrix p_inv = *inverse(p);
    const QMatrix x = p * j * p_inv;
    const QMatrix expected_s = p * diag * p_inv;

    const JordanPair parts = jordan_decompose(x);
    std::ostringstream label;
    label << "case " << t << " (dim " << d << ")";
    if (parts.semisimple != expected_s || parts.nilpotent != x - expected_s) {
      r.detail = label.str() + ": decomposition differs from the conjugated block oracle";
      return r;
    }
    if (parts.semisimple + parts.nilpotent != x ||
        parts.semisimple * parts.nilpotent != parts.nilpotent * parts.semisimple) {
      r.detail = label.str() + ": sum or commutation invariant failed";
      return r;
    }
    const QPoly mp = minpoly(parts.semisimple);
    if (poly_gcd(mp, mp.derivative()).degree() != 0) {
      r.detail = label.str() + ": semisimple part has a repeated factor";
      return r;
    }
    if (!is_nilpotent_matrix(parts.nilpotent)) {
      r.detail = label.str() + ": nilpotent part is not nilpotent";
      return r;
    }
    if (parts.semisimple_witness.eval(x) != parts.semisimple ||
        parts.nilpotent_witness.eval(x) != parts.nilpotent) {
      r.detail = label.str() + ": witness polynomials do not evaluate to the components";
      return r;
    }
    if (parts.nilpotent.trace() != 0) {
      r.detail = label.str() + ": nilpotent part has nonzero trace";
      return r;
    }
    // eigenprojection reconstruction oracle
    const Eigenstructure es = eigenstructure(parts.semisimple);
    QMatrix rebuilt(d);
    Rational trace_sum(0);
    for (std::size_t c = 0; c < es.eigenvalues.size(); ++c) {
      rebuilt += es.eigenvalues[c] * es.projections[c];
      trace_sum += Rational(static_cast<long>(es.multiplicities[c])) * es.eigenvalues[c];
    }
    if (rebuilt != parts.semisimple || trace_sum != eig_sum || x.trace() != eig_sum) {
      r.detail = label.str() + ": eigenprojection reconstruction failed";
      return r;
    }
    // scaling equivariance
    Rational c = rng.rational(5, 3);
    if (c == 0) c = 1;
    const JordanPair scaled = jordan_decompose(c * x);
    if (scaled.semisimple != c * parts.semisimple || scaled.nilpotent != c * parts.nilpotent) {
      r.detail = label.str() + ": scaling equivariance failed";
      return r;
    }
    // conjugation equivariance
    const QMatrix q = shear_conjugator(rng, d);
    const QMatrix q_inv = *inverse(q);
    const JordanPair conj = jordan_decompose(q * x * q_inv);
    if (conj.semisimple != q * parts.semisimple * q_inv ||
        conj.nilpotent != q * parts.nilpotent * q_inv) {
      r.detail = label.str() + ": conjugation equivariance failed";
      return r;
    }
  }
  r.passed = true;
  r.detail = "200 cases, all invariants and both equivariances exact";
  return r;
}

ClaimResult claim_replica_oracle(std::uint64_t seed) {
  ClaimResult r{"8", "relation-lattice route equals the brute-force integer-relation oracle on diagonal spectra", false, ""};
  Rng rng(mix(seed, 8));
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = static_cast<std::size_t>(rng.integer(1, 4));
    QMatrix xs(d);
    for (std::size_t i = 0; i < d; ++i) xs.at(i, i) = Rational(rng.integer(-3, 3));

    const auto [space, lattice] = replica_semisimple(xs);

    // oracle: distinct values ascending, direct 0/1 projections,
    // exhaustive relation search with coordinates bounded by 6
    std::vector<Rational> distinct;
    for (std::size_t i = 0; i < d; ++i) {
      bool seen = false;
      for (const Rational& v : distinct) seen = seen || v == xs.at(i, i);
      if (!seen) distinct.push_back(xs.at(i, i));
    }
    std::sort(distinct.begin(), distinct.end());
    const std::size_t k = distinct.size();
    std::vector<QMatrix> projections(k, QMatrix(d));
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i = 0; i < d; ++i)
        if (xs.at(i, i) == distinct[c]) projections[c].at(i, i) = 1;

    std::vector<std::vector<Integer>> relations;
    std::vector<long> p(k, -6);
    while (true) {
      Rational dot(0);
      bool zero_vec = true;
      for (std::size_t i = 0; i < k; ++i) {
        if (p[i] != 0) zero_vec = false;
        dot += Rational(p[i]) * distinct[i];
      }
      if (!zero_vec && dot == 0) relations.emplace_back(p.begin(), p.end());
      std::size_t pos = 0;
      while (pos < k && p[pos] == 6) p[pos++] = -6;
      if (pos == k) break;
      ++p[pos];
    }
    std::ostringstream label;
    label << "case " << t;
    if (IntegerLattice::from_generators(k, relations) != lattice) {
      r.detail = label.str() + ": brute-force relations span a different lattice";
      return r;
    }
    std::vector<QMatrix> oracle_gens;
    std::vector<std::vector<Rational>> mu_basis;
    if (relations.empty()) {
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> e(k, Rational(0));
        e[i] = 1;
        mu_basis.push_back(std::move(e));
      }
    } else {
      Mat rows(relations.size(), k);
      for (std::size_t i = 0; i < relations.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) rows(i, j) = Rational(relations[i][j]);
      mu_basis = kernel(rows);
    }
    for (const auto& mu : mu_basis) {
      QMatrix y(d);
      for (std::size_t c = 0; c < k; ++c)
        if (mu[c] != 0) y += mu[c] * projections[c];
      oracle_gens.push_back(std::move(y));
    }
    if (Subspace::span(d, oracle_gens) != space) {
      r.detail = label.str() + ": oracle subspace differs";
      return r;
    }
  }
  r.passed = true;
  r.detail = "100 seeded diagonal cases, lattices and subspaces identical";
  return r;
}

ClaimResult claim_structure(std::uint64_t) {
  ClaimResult r{"9", "structure constants, central series, derived subalgebra and center of the 3-dimensional family", false, ""};
  for (const auto& [alpha, beta] : parameter_pairs()) {
    const LieSubalgebra h = heisenberg_h(alpha, beta);
    if (structure_constants(h) != model_filiform(3)) {
      r.detail = pair_label(alpha, beta) + ": structure constants differ from the 3-dimensional model";
      return r;
    }
    const std::vector<Subspace> series = lower_central_series(h);
    if (series.size() != 3 || series[0].dim() != 3 || series[1].dim() != 1 || series[2].dim() != 0) {
      r.detail = pair_label(alpha, beta) + ": central series dimensions are not (3,1,0)";
      return r;
    }
    const Subspace last_line = Subspace::span(4, {h.basis()[2]});
    if (derived_subalgebra(h) != last_line || center(h) != last_line) {
      r.detail = pair_label(alpha, beta) + ": derived subalgebra or center is not the expected line";
      return r;
    }
  }
  r.passed = true;
  r.detail = "exact for every parameter pair";
  return r;
}

}  // namespace

std::vector<ClaimResult> run_catalog_claims(std::uint64_t seed) {
  std::vector<ClaimResult> results;
  const std::vector<ClaimResult (*)(std::uint64_t)> claims{
      claim_refutation,     claim_hull,           claim_splitting,
      claim_loci,           claim_filiform_family, claim_filiform_report,
      claim_jordan_suite,   claim_replica_oracle, claim_structure,
  };
  for (auto* claim : claims) {
    try {
      results.push_back(claim(seed));
    } catch (const std::exception& e) {
      ClaimResult failed;
      failed.id = std::to_string(results.size() + 1);
      failed.title = "claim raised an exception";
      failed.passed = false;
      failed.detail = e.what();
      results.push_back(std::move(failed));
    }
  }
  return results;
}

bool all_passed(const std::vector<ClaimResult>& claims) {
  for (const ClaimResult& c : claims)
    if (!c.passed) return false;
  return true;
}

}  // namespace lie
