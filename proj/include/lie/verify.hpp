#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lie {

struct ClaimResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;  // first failure, or a short summary
};

/// Re-runs every bundled worked example end to end: refutations with
/// certified witnesses, hull reconstruction, splitting of the
/// 4-dimensional hull, nilpotency loci, the filiform family, and the
/// exactness property suites. All arithmetic is exact; the seed only
/// steers sample populations.
std::vector<ClaimResult> run_catalog_claims(std::uint64_t seed);

bool all_passed(const std::vector<ClaimResult>& claims);

}  // namespace lie
