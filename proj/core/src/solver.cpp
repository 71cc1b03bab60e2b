#include "anonhard/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "anonhard/error.hpp"

namespace anonhard {

namespace {

using Mask = std::uint32_t;

// Suppressed-column sets for every subset of rows, one bitset per subset.
class SubsetColumns {
 public:
  explicit SubsetColumns(const Instance& inst)
      : words_((inst.width() + 63) / 64),
        count_(std::size_t{1} << inst.size()),
        bits_(count_ * words_, 0),
        suppressed_(count_, 0) {
    const std::size_t n = inst.size();
    for (std::size_t mask = 1; mask < count_; ++mask) {
      const auto lowest = static_cast<std::size_t>(std::countr_zero(mask));
      const std::size_t rest = mask & (mask - 1);
      if (rest == 0) continue;
      // Columns split inside `rest`, plus columns where the lowest row
      // disagrees with any representative of `rest`.
      const auto other = static_cast<std::size_t>(std::countr_zero(rest));
      std::uint64_t* out = &bits_[mask * words_];
      const std::uint64_t* prev = &bits_[rest * words_];
      std::copy(prev, prev + words_, out);
      const Row& a = inst.row(lowest);
      const Row& b = inst.row(other);
      for (std::size_t c = 0; c < a.size(); ++c) {
        if (a[c] != b[c]) out[c / 64] |= std::uint64_t{1} << (c % 64);
      }
      std::size_t total = 0;
      for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::size_t>(std::popcount(out[w]));
      suppressed_[mask] = total;
    }
    (void)n;
  }

  std::size_t suppressed(Mask mask) const { return suppressed_[mask]; }
  Cost cost(Mask mask) const {
    return static_cast<Cost>(suppressed_[mask]) * std::popcount(mask);
  }

 private:
  std::size_t words_;
  std::size_t count_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> suppressed_;
};

class PartitionSearch {
 public:
  PartitionSearch(const Instance& inst, const SubsetColumns& table)
      : n_(inst.size()), k_(inst.k()), cap_(2 * inst.k() - 1), table_(table) {}

  SolveResult run() {
    descend(0, 0);
    SolveResult result;
    for (auto mask : best_) {
      Cluster c;
      for (std::size_t r = 0; r < n_; ++r) {
        if (mask >> r & 1) c.push_back(r);
      }
      result.clustering.clusters.push_back(std::move(c));
    }
    result.cost = best_cost_;
    result.optimal = true;
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  void descend(std::size_t row, Cost partial) {
    ++nodes_;
    if (partial >= best_cost_) return;
    std::size_t missing = 0;
    for (auto m : open_) missing += k_ - std::min<std::size_t>(k_, static_cast<std::size_t>(std::popcount(m)));
    if (missing > n_ - row) return;
    if (row == n_) {
      best_cost_ = partial;
      best_ = open_;
      return;
    }
    const Mask bit = Mask{1} << row;
    for (std::size_t j = 0; j < open_.size(); ++j) {
      const Mask before = open_[j];
      if (static_cast<std::size_t>(std::popcount(before)) >= cap_) continue;
      const Cost delta = table_.cost(before | bit) - table_.cost(before);
      open_[j] = before | bit;
      descend(row + 1, partial + delta);
      open_[j] = before;
    }
    open_.push_back(bit);
    descend(row + 1, partial);
    open_.pop_back();
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t cap_;
  const SubsetColumns& table_;
  std::vector<Mask> open_;
  std::vector<Mask> best_;
  Cost best_cost_ = std::numeric_limits<Cost>::max();
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult exact_kap(const Instance& inst, std::size_t limit) {
  const std::size_t cap = std::min(limit, kExactHardLimit);
  if (inst.size() > cap) {
    throw Error(ErrorKind::TooLarge, std::to_string(inst.size()) + " rows exceed the exact limit of " +
                                         std::to_string(cap));
  }
  SubsetColumns table(inst);
  return PartitionSearch(inst, table).run();
}

SolveResult greedy_kap(const Instance& inst) {
  const std::size_t n = inst.size();
  const std::size_t k = inst.k();
  std::vector<bool> used(n, false);
  std::size_t remaining = n;
  Clustering p;
  std::uint64_t steps = 0;

  auto added_cost = [&](const Cluster& c, std::size_t r) {
    Cluster grown = c;
    grown.push_back(r);
    return cluster_cost(inst, grown) - cluster_cost(inst, c);
  };

  while (remaining >= k) {
    std::size_t seed = 0;
    while (used[seed]) ++seed;
    Cluster c{seed};
    used[seed] = true;
    --remaining;
    while (c.size() < k) {
      std::size_t pick = n;
      Cost pick_cost = std::numeric_limits<Cost>::max();
      for (std::size_t r = 0; r < n; ++r) {
        if (used[r]) continue;
        ++steps;
        const Cost delta = added_cost(c, r);
        if (delta < pick_cost) {
          pick_cost = delta;
          pick = r;
        }
      }
      c.push_back(pick);
      used[pick] = true;
      --remaining;
    }
    p.clusters.push_back(std::move(c));
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (used[r]) continue;
    std::size_t target = 0;
    Cost target_cost = std::numeric_limits<Cost>::max();
    for (std::size_t ci = 0; ci < p.clusters.size(); ++ci) {
      ++steps;
      const Cost delta = added_cost(p.clusters[ci], r);
      if (delta < target_cost) {
        target_cost = delta;
        target = ci;
      }
    }
    p.clusters[target].push_back(r);
    used[r] = true;
  }
  SolveResult result;
  result.cost = clustering_cost(inst, p);
  result.clustering = std::move(p);
  result.optimal = false;
  result.nodes_explored = steps;
  return result;
}

}  // namespace anonhard
