#pragma once

#include <cstddef>
#include <cstdint>

#include "anonhard/cost.hpp"
#include "anonhard/table.hpp"

namespace anonhard {

struct SolveResult {
  Clustering clustering;
  Cost cost = 0;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultExactLimit = 12;
inline constexpr std::size_t kExactHardLimit = 20;

/// Minimum-cost clustering by enumerating set partitions whose blocks have
/// between k and 2k-1 rows (some optimum always has that shape). Partitions
/// are visited in restricted-growth order with cost pruning, so among equal
/// optima the first in that order is returned. Throws TooLarge when the
/// instance has more than min(limit, kExactHardLimit) rows.
SolveResult exact_kap(const Instance& inst, std::size_t limit = kDefaultExactLimit);

/// Greedy baseline: repeatedly seeds a cluster with the lowest unassigned row
/// and grows it to exactly k rows by cheapest addition; leftover rows join the
/// cluster where they add the least cost.
SolveResult greedy_kap(const Instance& inst);

}  // namespace anonhard
