#include "anonhard/table.hpp"

#include <algorithm>
#include <string>

#include "anonhard/error.hpp"

namespace anonhard {

Instance::Instance(std::vector<Row> rows, std::size_t k) : rows_(std::move(rows)), k_(k) {
  if (k_ == 0) throw Error(ErrorKind::Infeasible, "k must be positive");
  if (rows_.size() < k_) {
    throw Error(ErrorKind::Infeasible, std::to_string(rows_.size()) +
                                           " rows cannot be clustered with k=" +
                                           std::to_string(k_));
  }
  const auto width = rows_.front().size();
  if (width == 0) throw Error(ErrorKind::LengthMismatch, "rows must have positive length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != width) {
      throw Error(ErrorKind::LengthMismatch, "row " + std::to_string(i) + " has length " +
                                                 std::to_string(rows_[i].size()) +
                                                 ", expected " + std::to_string(width));
    }
  }
}

std::size_t Clustering::row_count() const {
  std::size_t total = 0;
  for (const auto& c : clusters) total += c.size();
  return total;
}

void validate_partition(const Clustering& p, std::size_t row_count) {
  std::vector<bool> seen(row_count, false);
  std::size_t covered = 0;
  for (std::size_t ci = 0; ci < p.clusters.size(); ++ci) {
    const auto& cluster = p.clusters[ci];
    if (cluster.empty()) {
      throw Error(ErrorKind::InvalidPartition, "cluster " + std::to_string(ci) + " is empty");
    }
    for (auto r : cluster) {
      if (r >= row_count) {
        throw Error(ErrorKind::InvalidPartition, "row index " + std::to_string(r) +
                                                     " out of range in cluster " +
                                                     std::to_string(ci));
      }
      if (seen[r]) {
        throw Error(ErrorKind::InvalidPartition,
                    "row " + std::to_string(r) + " appears more than once");
      }
      seen[r] = true;
      ++covered;
    }
  }
  if (covered != row_count) {
    auto missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
    throw Error(ErrorKind::InvalidPartition,
                "row " + std::to_string(missing) + " is not in any cluster");
  }
}

Clustering normalized(Clustering p) {
  for (auto& c : p.clusters) std::sort(c.begin(), c.end());
  std::sort(p.clusters.begin(), p.clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return p;
}

std::vector<std::size_t> cluster_index(const Clustering& p, std::size_t row_count) {
  validate_partition(p, row_count);
  std::vector<std::size_t> owner(row_count);
  for (std::size_t ci = 0; ci < p.clusters.size(); ++ci) {
    for (auto r : p.clusters[ci]) owner[r] = ci;
  }
  return owner;
}

}  // namespace anonhard
