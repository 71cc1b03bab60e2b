#pragma once

#include <cstddef>
#include <random>

#include "anonhard/graphs.hpp"
#include "anonhard/table.hpp"

namespace anonhard {

using Rng = std::mt19937_64;

/// Shuffles 0..row_count-1 and cuts the sequence into blocks whose sizes are
/// drawn uniformly from [min_block, max_block]; a short tail is merged into
/// the previous block. Requires k <= min_block <= max_block and row_count >= k.
Clustering random_partition(std::size_t row_count, std::size_t k, std::size_t min_block,
                            std::size_t max_block, Rng& rng);

/// Applies `moves` random feasibility-preserving edits: swapping two rows
/// between clusters, moving a row out of a cluster larger than k, or merging
/// two clusters.
Clustering perturb(Clustering p, std::size_t k, std::size_t moves, Rng& rng);

/// Each vertex joins with probability 1/2, then a random endpoint of every
/// still-uncovered edge is added.
VertexCover random_cover(const CubicGraph& g, Rng& rng);

}  // namespace anonhard
