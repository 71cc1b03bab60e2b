#pragma once

// Reduction from vertex cover on cubic graphs to 4-anonymity with rows of
// length 8. Each source vertex v_i contributes five rows R_i, each source
// edge one edge row r(i,j), and four free rows pad the table. The 8 columns
// form 4 two-column blocks; every vertex gets a block b(R_i) distinct from
// the blocks of its neighbors.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "anonhard/cost.hpp"
#include "anonhard/graphs.hpp"
#include "anonhard/sampling.hpp"
#include "anonhard/table.hpp"

namespace anonhard::width8 {

inline constexpr std::size_t kAnonymity = 4;
inline constexpr std::size_t kWidth = 8;
inline constexpr std::size_t kBlocks = 4;
inline constexpr std::size_t kRowsPerVertex = 5;
inline constexpr std::size_t kFreeRows = 4;

/// block[v] in 1..4; block j covers columns 2j-1 and 2j (1-based).
struct BlockAssignment {
  std::vector<int> block;
  friend bool operator==(const BlockAssignment&, const BlockAssignment&) = default;
};

/// Greedy coloring in ascending vertex order; three neighbors leave a block free.
BlockAssignment assign_blocks(const CubicGraph& g);
bool is_proper(const CubicGraph& g, const BlockAssignment& blocks);

struct VertexRow {
  std::size_t vertex = 0;
  int h = 0;  // 1..5
};
struct EdgeRow {
  std::size_t source_edge = 0;
  std::size_t u = 0;
  std::size_t v = 0;
};
struct FreeRow {
  int index = 0;  // 1..4
};
using Provenance = std::variant<VertexRow, EdgeRow, FreeRow>;

std::string describe(const Provenance& p);

/// Row order: R_1..R_n (five rows each), then edge rows in source-edge
/// order, then the four free rows.
class Width8Instance {
 public:
  explicit Width8Instance(const CubicGraph& graph);

  const CubicGraph& graph() const { return graph_; }
  const BlockAssignment& blocks() const { return blocks_; }
  const Instance& instance() const { return instance_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  const Provenance& provenance(std::size_t row) const { return provenance_.at(row); }

  std::size_t vertex_row(std::size_t vertex, int h) const;
  std::size_t edge_row(std::size_t source_edge) const;
  std::size_t free_row(int index) const;

  /// Rows of R_v.
  Cluster vertex_rows(std::size_t vertex) const;
  /// Rows of E(R_v): the edge rows of the three edges at v.
  Cluster incident_edge_rows(std::size_t vertex) const;
  /// True when `row` lies in R_v or E(R_v).
  bool in_neighborhood(std::size_t row, std::size_t vertex) const;

 private:
  CubicGraph graph_;
  BlockAssignment blocks_;
  std::vector<Provenance> provenance_;
  Instance instance_;
};

Width8Instance build_instance(const CubicGraph& graph);

enum class VertexColor { Red, Black };

/// Red vertices are in the cover, black ones are not. The filler cluster
/// (free rows plus every edge row not taken by a black vertex) is implied.
struct CanonicalSolution {
  std::vector<VertexColor> color;
  friend bool operator==(const CanonicalSolution&, const CanonicalSolution&) = default;
};

/// One cluster holding R_v (cost 15).
std::vector<Cluster> build_red(const Width8Instance& inst, std::size_t vertex);
/// R_v minus its fifth row (cost 12), and that row with E(R_v) (cost 24).
std::vector<Cluster> build_black(const Width8Instance& inst, std::size_t vertex);

/// Filler cluster first, then per-vertex clusters in vertex order. Throws
/// EdgeRowConflict when two adjacent vertices are both black.
Clustering expand(const Width8Instance& inst, const CanonicalSolution& solution);

CanonicalSolution recognize(const Width8Instance& inst, const Clustering& p);
bool is_canonical(const Width8Instance& inst, const Clustering& p);

Clustering vc_to_solution(const Width8Instance& inst, const VertexCover& cover);
VertexCover solution_to_vc(const Width8Instance& inst, const Clustering& p);

/// 12(n-p) + 15p + 8m + 32.
Cost expected_cost(std::size_t n, std::size_t m, std::size_t cover_size);

/// Rewrites a feasible solution into a canonical one without raising its
/// cost, in four stages:
///  1. clusters whose rows all pay 8 are merged into one filler cluster;
///  2. if R_v meets more than two clusters, those not inside R_v u E(R_v)
///     are merged into the filler;
///  3. R_v rows in the filler move to the other cluster holding R_v rows,
///     or become their own cluster R_v;
///  4. the 3+1 / 2+2 split becomes a black solution, and R_v plus some edge
///     rows becomes red with the edge rows sent to the filler.
Clustering canonicalize(const Width8Instance& inst, const Clustering& s);

struct LocalityReport {
  std::size_t cheap_clusters = 0;       // clusters whose rows pay less than 8
  std::size_t locality_violations = 0;  // such clusters not inside any R_v u E(R_v)
  std::size_t vertex_rows = 0;
  std::size_t low_bound_violations = 0;  // R_v rows with < 3 even columns suppressed outside b(R_v)
  std::vector<std::string> messages;

  bool passed() const { return locality_violations == 0 && low_bound_violations == 0; }
};

/// Throws Infeasible for clusterings with a cluster smaller than 4.
LocalityReport verify_locality(const Width8Instance& inst, const Clustering& p);

/// Random feasible solution for property trials. Half of the draws cut a
/// shuffled row order into blocks of 4..7 rows and normalize the sizes; the
/// rest take the canonical solution of a random cover and apply a few random
/// feasibility-preserving edits.
Clustering sample_solution(const Width8Instance& inst, Rng& rng);

}  // namespace anonhard::width8
