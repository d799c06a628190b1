#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdiam {

struct SelftestCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Quick invariant suite: field axioms, metric and perp isometry (exhaustive at
/// q=2, n<=3 and randomized up to n=8), layer counts, constructions, small
/// oracle runs and the exact sweeps. Deterministic for a given seed.
std::vector<SelftestCheck> run_selftest(std::uint64_t seed = 1, int samples = 2000);

}  // namespace qdiam
