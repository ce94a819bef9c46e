#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cram/factorization.hpp"

namespace cram {

struct DesignSearchResult {
  std::optional<Factorization> found;
  // Meaningful when !found: the whole space was eliminated (vs. budget ran
  // out).
  bool exhausted = false;
  std::int64_t nodes = 0;
};

// Backtracking search for a factorization of K_N whose class c is a disjoint
// union of cliques with the component sizes profiles[c].  Classes are filled
// in order; the first class is pinned to the least labeled partition of its
// profile (consecutive blocks, sizes ascending) and classes with equal
// profiles are forced into increasing order, so each factorization class-set
// is tried once per class ordering.  The found result, when single-threaded,
// is the least one under that encoding.
DesignSearchResult factorization_search(int N, const std::vector<std::vector<int>>& profiles,
                                        std::int64_t budget_ms = 60000);  // throws BadProfiles

}  // namespace cram
