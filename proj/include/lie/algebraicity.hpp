#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lie/matrix.hpp"
#include "lie/subalgebra.hpp"
#include "lie/subspace.hpp"

namespace lie {

/// Which closure requirement an element failed.
enum class ClosureFailure { SemisimplePart, NilpotentPart, Replica };
std::string to_string(ClosureFailure part);

/// A certified refutation: `element` lies in the algebra while
/// `outside` (its named component, or a replica basis element) does not.
/// Re-checkable by a single span membership test.
struct Witness {
  QMatrix element;
  QMatrix outside;
  ClosureFailure part;
};

enum class VerdictKind { NotAlgebraic, ClosedOnSamples, PerfectHenceAlgebraic };
std::string to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind;
  std::optional<Witness> witness;    // exactly when NotAlgebraic
  std::size_t samples_checked = 0;   // population actually tested
  std::uint64_t seed = 0;
  std::size_t split_failures = 0;    // samples downgraded to component-only checks
};

struct CheckOptions {
  std::size_t samples = 32;
  long bound = 5;
  std::uint64_t seed = 0;
};

/// Closure test for algebraicity. Fast path: an algebra equal to its
/// derived subalgebra is algebraic outright. Otherwise tests the
/// population basis + pairwise basis sums + seeded random integer
/// combinations: every element must keep its semisimple part, nilpotent
/// part, and (for rational spectra) whole replica inside the algebra.
/// Refutation is exact and certified; confirmation is sample-relative.
Verdict check_algebraic(const LieSubalgebra& L, const CheckOptions& options = {});

struct Adjunction {
  QMatrix source;    // the element whose closure failed
  QMatrix adjoined;  // what was added
  ClosureFailure reason;
};

struct HullReport {
  LieSubalgebra hull;
  std::size_t rounds = 0;
  std::vector<Adjunction> adjoined;
  bool valid = false;  // false when the round or dimension cap was hit
  Verdict verdict;     // closure verdict for the returned hull
};

struct HullOptions {
  std::size_t samples = 32;
  long bound = 5;
  std::uint64_t seed = 0;
  std::size_t max_rounds = 16;
};

/// Fixed-point iteration toward the smallest algebraic algebra
/// containing L: adjoin missing components and replica elements of the
/// check population, re-close under brackets, repeat until a full round
/// adjoins nothing. Each adjunction is logged with its source.
HullReport algebraic_hull(const LieSubalgebra& L, const HullOptions& options = {});

/// Splitting of a nilpotent algebra into the span of the nilpotent
/// components of its basis and the span of the semisimple ones, with
/// every structural requirement re-validated rather than assumed.
struct NilpotentDecomposition {
  Subspace nil_part;
  Subspace semisimple_part;
  bool valid = false;
  std::string reason;  // empty when valid
};

/// Throws NotNilpotentAlgebra when L is not nilpotent. Returns
/// valid=false (with the first failing requirement named) exactly when
/// the algebra does not admit such a splitting, e.g. when a component
/// of a basis element leaves the algebra.
NilpotentDecomposition nilpotent_decomposition(const LieSubalgebra& L);

}  // namespace lie
