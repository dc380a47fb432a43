// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "lie/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  const std::vector<lie::ClaimResult> claims = lie::run_catalog_claims(seed);
  std::size_t passed = 0;
  for (const lie::ClaimResult& c : claims) {
    std::cout << "criterion " << c.id << ": " << (c.passed ? "PASS" : "FAIL") << " - " << c.title
              << " (" << c.detail << ")\n";
    if (c.passed) ++passed;
  }
  std::cout << "ACCEPTANCE: " << passed << "/" << claims.size() << " criteria passed (seed " << seed
            << ")\n";
  return passed == claims.size() ? 0 : 1;
}
