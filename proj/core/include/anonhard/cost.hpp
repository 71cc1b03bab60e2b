#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "anonhard/table.hpp"

namespace anonhard {

using Cost = std::int64_t;

/// Number of positions where the rows differ. Throws LengthMismatch.
std::size_t hamming(std::span<const Symbol> a, std::span<const Symbol> b);

/// Columns on which not all rows of the cluster agree, ascending.
std::vector<std::size_t> suppressed_columns(const Instance& inst, std::span<const std::size_t> cluster);
std::size_t suppressed_count(const Instance& inst, std::span<const std::size_t> cluster);

/// |C| times the number of suppressed columns. Throws EmptyCluster.
Cost cluster_cost(const Instance& inst, std::span<const std::size_t> cluster);

/// |C| times the largest pairwise Hamming distance inside C; never exceeds
/// cluster_cost. Throws EmptyCluster.
Cost cluster_lower_bound(const Instance& inst, std::span<const std::size_t> cluster);

/// Sum of cluster costs. Throws InvalidPartition.
Cost clustering_cost(const Instance& inst, const Clustering& p);

/// True iff every cluster has at least k rows. Throws InvalidPartition.
bool is_feasible(const Instance& inst, const Clustering& p);

/// Splits every cluster larger than 2k-1 by peeling off its k smallest row
/// indices until the remainder fits; smaller clusters pass through untouched.
/// Removing rows never adds a suppressed column, so the cost cannot rise.
/// Throws Infeasible if `p` has a cluster smaller than k.
Clustering normalize_cluster_sizes(const Instance& inst, const Clustering& p);

}  // namespace anonhard
