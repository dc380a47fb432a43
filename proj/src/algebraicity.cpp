#include "lie/algebraicity.hpp"

#include <utility>

#include "lie/errors.hpp"
#include "lie/jordan.hpp"
#include "lie/poly.hpp"
#include "lie/replica.hpp"
#include "lie/rng.hpp"

namespace lie {

std::string to_string(ClosureFailure part) {
  switch (part) {
    case ClosureFailure::SemisimplePart: return "semisimple-part";
    case ClosureFailure::NilpotentPart: return "nilpotent-part";
    case ClosureFailure::Replica: return "replica";
  }
  return "?";
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::NotAlgebraic: return "NotAlgebraic";
    case VerdictKind::ClosedOnSamples: return "ClosedOnSamples";
    case VerdictKind::PerfectHenceAlgebraic: return "PerfectHenceAlgebraic";
  }
  return "?";
}

namespace {

// basis, then pairwise basis sums, then seeded random integer combinations
std::vector<QMatrix> check_population(const LieSubalgebra& L, std::size_t samples, long bound,
                                      std::uint64_t seed) {
  const auto& basis = L.basis();
  std::vector<QMatrix> population = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) population.push_back(basis[i] + basis[j]);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    QMatrix x(L.ambient_dim());
    for (const QMatrix& b : basis) {
      const long c = rng.integer(-bound, bound);
      if (c != 0) x += Rational(c) * b;
    }
    population.push_back(std::move(x));
  }
  return population;
}

}  // namespace

Verdict check_algebraic(const LieSubalgebra& L, const CheckOptions& options) {
  Verdict verdict;
  verdict.seed = options.seed;
  if (derived_subalgebra(L) == L.space()) {
    verdict.kind = VerdictKind::PerfectHenceAlgebraic;
    return verdict;
  }

  const std::vector<QMatrix> population =
      check_population(L, options.samples, options.bound, options.seed);
  for (const QMatrix& x : population) {
    ++verdict.samples_checked;
    const JordanPair parts = jordan_decompose(x);
    if (!L.space().contains(parts.semisimple)) {
      verdict.kind = VerdictKind::NotAlgebraic;
      verdict.witness = Witness{x, parts.semisimple, ClosureFailure::SemisimplePart};
      return verdict;
    }
    if (!L.space().contains(parts.nilpotent)) {
      verdict.kind = VerdictKind::NotAlgebraic;
      verdict.witness = Witness{x, parts.nilpotent, ClosureFailure::NilpotentPart};
      return verdict;
    }
    try {
      const ReplicaResult rep = replica(parts);
      for (const QMatrix& g : rep.total.basis()) {
        if (!L.space().contains(g)) {
          verdict.kind = VerdictKind::NotAlgebraic;
          verdict.witness = Witness{x, g, ClosureFailure::Replica};
          return verdict;
        }
      }
    } catch (const SplitFailure&) {
      ++verdict.split_failures;  // component checks above still ran
    }
  }
  verdict.kind = VerdictKind::ClosedOnSamples;
  return verdict;
}

HullReport algebraic_hull(const LieSubalgebra& L, const HullOptions& options) {
  const std::size_t ambient = L.ambient_dim();
  const std::size_t full_dim = ambient * ambient;

  LieSubalgebra current = L;
  std::vector<Adjunction> log;
  std::size_t rounds = 0;
  bool stable = false;

  while (rounds < options.max_rounds) {
    ++rounds;
    Subspace working = current.space();
    std::vector<QMatrix> pending;
    const std::vector<QMatrix> population =
        check_population(current, options.samples, options.bound, options.seed);

    auto adjoin = [&](const QMatrix& source, const QMatrix& candidate, ClosureFailure reason) {
      if (working.contains(candidate)) return;
      log.push_back(Adjunction{source, candidate, reason});
      pending.push_back(candidate);
      working = sum(working, Subspace::span(ambient, {candidate}));
    };

    for (const QMatrix& x : population) {
      const JordanPair parts = jordan_decompose(x);
      adjoin(x, parts.semisimple, ClosureFailure::SemisimplePart);
      adjoin(x, parts.nilpotent, ClosureFailure::NilpotentPart);
      try {
        const ReplicaResult rep = replica(parts);
        for (const QMatrix& g : rep.total.basis()) adjoin(x, g, ClosureFailure::Replica);
      } catch (const SplitFailure&) {
        // component adjunctions above suffice for this element
      }
    }

    if (pending.empty()) {
      stable = true;
      break;
    }
    std::vector<QMatrix> gens = current.space().basis();
    gens.insert(gens.end(), pending.begin(), pending.end());
    current = generate_lie(gens);
    if (current.dim() == full_dim) {
      // all of gl(n); one more population scan will close
      continue;
    }
  }

  HullReport report{std::move(current), rounds, std::move(log), stable, Verdict{}};
  report.verdict = check_algebraic(report.hull,
                                   CheckOptions{options.samples, options.bound, options.seed});
  return report;
}

NilpotentDecomposition nilpotent_decomposition(const LieSubalgebra& L) {
  if (!is_nilpotent_algebra(L))
    throw NotNilpotentAlgebra("decomposition applies to nilpotent algebras only");

  const std::size_t ambient = L.ambient_dim();
  NilpotentDecomposition out{Subspace(ambient), Subspace(ambient), false, ""};

  std::vector<QMatrix> nil_gens, semi_gens;
  std::string first_escape;
  for (std::size_t i = 0; i < L.basis().size(); ++i) {
    JordanPair parts = jordan_decompose(L.basis()[i]);
    if (first_escape.empty()) {
      if (!L.space().contains(parts.semisimple))
        first_escape = "semisimple component of basis element " + std::to_string(i + 1) +
                       " lies outside the algebra";
      else if (!L.space().contains(parts.nilpotent))
        first_escape = "nilpotent component of basis element " + std::to_string(i + 1) +
                       " lies outside the algebra";
    }
    if (!parts.nilpotent.is_zero()) nil_gens.push_back(std::move(parts.nilpotent));
    if (!parts.semisimple.is_zero()) semi_gens.push_back(std::move(parts.semisimple));
  }
  out.nil_part = Subspace::span(ambient, nil_gens);
  out.semisimple_part = Subspace::span(ambient, semi_gens);

  if (!first_escape.empty()) {
    out.reason = first_escape;
    return out;
  }
  if (out.nil_part.dim() + out.semisimple_part.dim() != L.dim() ||
      sum(out.nil_part, out.semisimple_part) != L.space()) {
    out.reason = "component spans do not split the algebra directly";
    return out;
  }
  if (!is_ideal(out.nil_part, L)) {
    out.reason = "nilpotent component span is not an ideal";
    return out;
  }
  for (const QMatrix& a : out.semisimple_part.basis()) {
    if (!is_semisimple(a)) {
      out.reason = "semisimple component span contains a non-semisimple element";
      return out;
    }
    for (const QMatrix& y : L.space().basis()) {
      if (!bracket(a, y).is_zero()) {
        out.reason = "semisimple component span is not central";
        return out;
      }
    }
  }
  const EngelResult engel = is_unipotent(LieSubalgebra::from_space(out.nil_part));
  if (!engel.unipotent) {
    out.reason = "nilpotent component span contains a non-nilpotent element";
    return out;
  }
  out.valid = true;
  return out;
}

}  // namespace lie
