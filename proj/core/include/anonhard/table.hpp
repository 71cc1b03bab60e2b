#pragma once

#include <cstddef>
#include <vector>

#include "anonhard/symbol.hpp"

namespace anonhard {

using Row = std::vector<Symbol>;

/// A table of equal-length rows together with the anonymity parameter k.
/// Immutable once constructed.
class Instance {
 public:
  /// Throws LengthMismatch for ragged or zero-width rows and Infeasible when
  /// k is zero or there are fewer than k rows.
  Instance(std::vector<Row> rows, std::size_t k);

  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t index) const { return rows_.at(index); }
  std::size_t size() const { return rows_.size(); }
  std::size_t width() const { return rows_.front().size(); }
  std::size_t k() const { return k_; }

 private:
  std::vector<Row> rows_;
  std::size_t k_;
};

using Cluster = std::vector<std::size_t>;

/// A partition of row indices {0..N-1}. Order of clusters and of indices
/// inside a cluster carries no meaning.
struct Clustering {
  std::vector<Cluster> clusters;

  std::size_t row_count() const;
  friend bool operator==(const Clustering&, const Clustering&) = default;
};

/// Throws InvalidPartition unless `p` covers 0..row_count-1 exactly once with
/// nonempty clusters.
void validate_partition(const Clustering& p, std::size_t row_count);

/// Sorts indices inside every cluster and then orders clusters by their
/// smallest index, so equal partitions compare equal.
Clustering normalized(Clustering p);

/// cluster_of[row] = index of the cluster containing row.
std::vector<std::size_t> cluster_index(const Clustering& p, std::size_t row_count);

}  // namespace anonhard
