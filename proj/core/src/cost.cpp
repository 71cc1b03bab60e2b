#include "anonhard/cost.hpp"

#include <algorithm>
#include <string>

#include "anonhard/error.hpp"

namespace anonhard {

namespace {

void require_nonempty(std::span<const std::size_t> cluster) {
  if (cluster.empty()) throw Error(ErrorKind::EmptyCluster, "cluster has no rows");
}

}  // namespace

std::size_t hamming(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "rows of length " + std::to_string(a.size()) +
                                               " and " + std::to_string(b.size()));
  }
  std::size_t distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) distance += a[i] != b[i];
  return distance;
}

std::vector<std::size_t> suppressed_columns(const Instance& inst,
                                            std::span<const std::size_t> cluster) {
  require_nonempty(cluster);
  const Row& first = inst.row(cluster.front());
  std::vector<bool> differs(inst.width(), false);
  for (auto r : cluster.subspan(1)) {
    const Row& row = inst.row(r);
    for (std::size_t col = 0; col < row.size(); ++col) {
      if (row[col] != first[col]) differs[col] = true;
    }
  }
  std::vector<std::size_t> columns;
  for (std::size_t col = 0; col < differs.size(); ++col) {
    if (differs[col]) columns.push_back(col);
  }
  return columns;
}

std::size_t suppressed_count(const Instance& inst, std::span<const std::size_t> cluster) {
  return suppressed_columns(inst, cluster).size();
}

Cost cluster_cost(const Instance& inst, std::span<const std::size_t> cluster) {
  return static_cast<Cost>(cluster.size() * suppressed_count(inst, cluster));
}

Cost cluster_lower_bound(const Instance& inst, std::span<const std::size_t> cluster) {
  require_nonempty(cluster);
  std::size_t widest = 0;
  for (std::size_t a = 0; a < cluster.size(); ++a) {
    for (std::size_t b = a + 1; b < cluster.size(); ++b) {
      widest = std::max(widest, hamming(inst.row(cluster[a]), inst.row(cluster[b])));
    }
  }
  return static_cast<Cost>(cluster.size() * widest);
}

Cost clustering_cost(const Instance& inst, const Clustering& p) {
  validate_partition(p, inst.size());
  Cost total = 0;
  for (const auto& c : p.clusters) total += cluster_cost(inst, c);
  return total;
}

bool is_feasible(const Instance& inst, const Clustering& p) {
  validate_partition(p, inst.size());
  return std::all_of(p.clusters.begin(), p.clusters.end(),
                     [&](const Cluster& c) { return c.size() >= inst.k(); });
}

Clustering normalize_cluster_sizes(const Instance& inst, const Clustering& p) {
  if (!is_feasible(inst, p)) {
    throw Error(ErrorKind::Infeasible, "clustering has a cluster smaller than k=" +
                                           std::to_string(inst.k()));
  }
  const std::size_t k = inst.k();
  const std::size_t cap = 2 * k - 1;
  Clustering out;
  for (const auto& c : p.clusters) {
    if (c.size() <= cap) {
      out.clusters.push_back(c);
      continue;
    }
    Cluster rest = c;
    std::sort(rest.begin(), rest.end());
    std::size_t start = 0;
    while (rest.size() - start > cap) {
      out.clusters.emplace_back(rest.begin() + start, rest.begin() + start + k);
      start += k;
    }
    out.clusters.emplace_back(rest.begin() + start, rest.end());
  }
  return out;
}

}  // namespace anonhard
