#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here calls into the code under test except for plain data
// accessors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include <anonhard/cost.hpp>
#include <anonhard/graphs.hpp>
#include <anonhard/table.hpp>

namespace oracle {

using anonhard::Cost;

inline Cost cluster_cost(const std::vector<anonhard::Row>& rows, const std::vector<std::size_t>& c) {
  Cost suppressed = 0;
  for (std::size_t col = 0; col < rows.front().size(); ++col) {
    bool differs = false;
    for (auto r : c) differs = differs || !(rows[r][col] == rows[c.front()][col]);
    if (differs) ++suppressed;
  }
  return suppressed * static_cast<Cost>(c.size());
}

inline Cost partition_cost(const std::vector<anonhard::Row>& rows,
                           const std::vector<std::vector<std::size_t>>& p) {
  Cost total = 0;
  for (const auto& c : p) total += cluster_cost(rows, c);
  return total;
}

inline std::size_t hamming(const anonhard::Row& a, const anonhard::Row& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] == b[i] ? 0 : 1;
  return d;
}

/// Every set partition with all blocks of size >= k, no upper bound on block size.
inline Cost unrestricted_optimum(const std::vector<anonhard::Row>& rows, std::size_t k) {
  const std::size_t n = rows.size();
  std::vector<std::vector<std::size_t>> blocks;
  Cost best = std::numeric_limits<Cost>::max();
  std::function<void(std::size_t)> go = [&](std::size_t r) {
    if (r == n) {
      for (const auto& b : blocks) {
        if (b.size() < k) return;
      }
      best = std::min(best, partition_cost(rows, blocks));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(r);
      go(r + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({r});
    go(r + 1);
    blocks.pop_back();
  };
  go(0);
  return best;
}

/// Smallest vertex cover size by scanning all vertex subsets.
inline std::size_t min_cover_size(const anonhard::CubicGraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!(mask >> e.u & 1) && !(mask >> e.v & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace oracle

namespace oracle {

/// First minimum-cost partition, in restricted-growth order, among those whose
/// blocks all have between k and 2k-1 rows. Blocks come out ordered by their
/// first row with rows ascending.
inline std::vector<std::vector<std::size_t>> first_restricted_optimum(
    const std::vector<anonhard::Row>& rows, std::size_t k) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> label(n, 0);
  std::vector<std::vector<std::size_t>> best;
  Cost best_cost = std::numeric_limits<Cost>::max();
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t r, std::size_t used) {
    if (r == n) {
      std::vector<std::vector<std::size_t>> blocks(used);
      for (std::size_t i = 0; i < n; ++i) blocks[label[i]].push_back(i);
      for (const auto& b : blocks) {
        if (b.size() < k || b.size() > 2 * k - 1) return;
      }
      const Cost c = partition_cost(rows, blocks);
      if (c < best_cost) {
        best_cost = c;
        best = blocks;
      }
      return;
    }
    for (std::size_t l = 0; l <= used; ++l) {
      label[r] = l;
      go(r + 1, std::max(used, l + 1));
    }
  };
  go(0, 0);
  return best;
}

}  // namespace oracle
