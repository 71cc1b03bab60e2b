#pragma once

// Reduction from vertex cover on cubic graphs to 3-anonymity over a binary
// alphabet. Every source vertex v_i becomes a vertex gadget: seven core
// vertices c_{i,1..7} (c_{i,1..3} are docking vertices), nine core edges and
// three bundles of four parallel "jolly" edges, one bundle per docking vertex.
// Every source edge becomes one edge-gadget edge joining two docking vertices.
// One binary row is emitted per gadget-graph edge.
//
// Indexing: gadgets use the 0-based source vertex index; core vertices keep
// their 1-based labels 1..7 and docking vertices 1..3. Column positions are
// 0-based.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "anonhard/cost.hpp"
#include "anonhard/graphs.hpp"
#include "anonhard/sampling.hpp"
#include "anonhard/table.hpp"

namespace anonhard::binary {

inline constexpr std::size_t kAnonymity = 3;
inline constexpr std::size_t kCoreVertices = 7;
inline constexpr std::size_t kDockingVertices = 3;
inline constexpr std::size_t kCoreEdges = 9;
inline constexpr std::size_t kJollyCopies = 4;
inline constexpr std::size_t kRowsPerGadget = kCoreEdges + kDockingVertices * kJollyCopies;

struct CoreEdge {
  int a = 0;
  int b = 0;
};

/// The nine core edges of every gadget. c4, c5, c6, c7 have three incident
/// core edges each and every docking vertex has two.
inline constexpr std::array<CoreEdge, kCoreEdges> kCoreEdgeTable{{
    {1, 4}, {4, 2}, {2, 5}, {5, 3}, {1, 7}, {7, 3}, {4, 6}, {5, 6}, {7, 6},
}};

/// The two core neighbors of docking vertex x (1..3).
std::array<int, 2> docking_neighbors(int docking);

/// Indices into kCoreEdgeTable of the core edges incident on core vertex c.
std::vector<std::size_t> core_edges_at(int core_vertex);

/// Column layout of a 30n-wide row: n vertex blocks of 21 columns, a jolly
/// block of 6n columns and an edge block of 3n columns.
struct BlockLayout {
  std::size_t n = 0;

  static constexpr std::size_t kVertexBlockWidth = 21;

  std::size_t vertex_block(std::size_t gadget) const { return kVertexBlockWidth * gadget; }
  std::size_t jolly_block() const { return kVertexBlockWidth * n; }
  std::size_t edge_block() const { return 27 * n; }
  std::size_t width() const { return 30 * n; }
};

/// Sets positions 3j-2..3j of vertex block `gadget` to 1 (j = core vertex).
Row encode_vertex(const BlockLayout& layout, std::size_t gadget, int core_vertex, Row row);
/// Sets positions 3i-2..3i of the edge block to 1 (i = gadget + 1).
Row encode_gadget(const BlockLayout& layout, std::size_t gadget, Row row);
/// Sets positions 6(i-1)+x and 6(i-1)+x+1 of the jolly block to 1.
Row encode_jolly(const BlockLayout& layout, std::size_t gadget, int docking, Row row);

struct CoreEdgeRow {
  std::size_t gadget = 0;
  std::size_t edge = 0;  // index into kCoreEdgeTable
};
struct JollyRow {
  std::size_t gadget = 0;
  int docking = 0;  // 1..3
  int copy = 0;     // 1..4
};
struct EdgeGadgetRow {
  std::size_t source_edge = 0;
  std::size_t gadget_i = 0;
  int docking_i = 0;
  std::size_t gadget_j = 0;
  int docking_j = 0;
};
using Provenance = std::variant<CoreEdgeRow, JollyRow, EdgeGadgetRow>;

std::string describe(const Provenance& p);

/// The gadget graph built around a cubic source graph. docking[i][x-1] is the
/// source edge attached to c_{i,x}; the bijection follows ascending neighbor
/// index.
struct GadgetGraph {
  std::size_t n = 0;
  std::vector<std::array<std::size_t, kDockingVertices>> docking;
  std::vector<EdgeGadgetRow> edge_gadgets;
};

/// A fully built 3-anonymity instance with row provenance.
///
/// Row order: for each gadget i, its 9 core rows (table order) then its 12
/// jolly rows (docking 1..3, copy 1..4); after all gadgets the m edge-gadget
/// rows in source-edge order.
class BinaryInstance {
 public:
  explicit BinaryInstance(const CubicGraph& graph);

  const CubicGraph& graph() const { return graph_; }
  const BlockLayout& layout() const { return layout_; }
  const GadgetGraph& gadgets() const { return gadgets_; }
  const Instance& instance() const { return instance_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  const Provenance& provenance(std::size_t row) const { return provenance_.at(row); }

  std::size_t core_row(std::size_t gadget, std::size_t core_edge) const;
  std::size_t jolly_row(std::size_t gadget, int docking, int copy) const;
  std::size_t edge_gadget_row(std::size_t source_edge) const;

  bool is_jolly(std::size_t row) const;
  bool is_edge_gadget(std::size_t row) const;
  /// Gadget owning a core or jolly row; throws for edge-gadget rows.
  std::size_t gadget_of(std::size_t row) const;

 private:
  CubicGraph graph_;
  BlockLayout layout_;
  GadgetGraph gadgets_;
  std::vector<Provenance> provenance_;
  Instance instance_;
};

BinaryInstance build_instance(const CubicGraph& graph);

// ---------------------------------------------------------------------------
// Pairwise distance catalog

struct DistanceCase {
  int number = 0;
  std::string description;
  bool exact = false;        // exact value vs lower bound
  std::size_t expected = 0;  // value or bound
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::size_t min_seen = 0;
  std::size_t max_seen = 0;
};

struct DistanceReport {
  std::vector<DistanceCase> cases;  // cases 1..12 in order

  bool all_exercised() const;
  std::size_t violations() const;
  bool passed() const { return all_exercised() && violations() == 0; }
};

/// Case numbers (1..12) whose hypotheses hold for the row pair. A pair can
/// satisfy several hypotheses at once (e.g. 2 and 12).
std::vector<int> applicable_cases(const Provenance& a, const Provenance& b);

/// Scans every unordered row pair, classifies it and checks the expected
/// Hamming distance. `jobs` worker threads share the scan.
DistanceReport verify_distance_catalog(const BinaryInstance& inst, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Canonical solutions

enum class GadgetType { A, B };

/// Per gadget: type a (not in the cover) or type b (in the cover), plus the
/// gadget whose type-b solution hosts each edge gadget.
struct CanonicalSolution {
  std::vector<GadgetType> type;
  std::vector<std::size_t> edge_owner;  // indexed by source edge

  friend bool operator==(const CanonicalSolution&, const CanonicalSolution&) = default;
};

/// Three stars centered at c4, c5, c7 and three four-row jolly clusters.
std::vector<Cluster> build_type_a(const BinaryInstance& inst, std::size_t gadget);

/// The c6 star, one docking cluster per docking vertex (its two core edges
/// plus the edge gadget when `with_edge_gadget[x-1]`, else one jolly row) and
/// the leftover jolly rows of each docking vertex. Throws
/// NoEdgeGadgetAssigned if no docking cluster takes its edge gadget.
std::vector<Cluster> build_type_b(const BinaryInstance& inst, std::size_t gadget,
                                  const std::array<bool, kDockingVertices>& with_edge_gadget);

/// Expands to a clustering. Throws NotCanonical if an edge gadget is owned by
/// a non-endpoint or a type-a gadget, or a type-b gadget owns none.
Clustering expand(const BinaryInstance& inst, const CanonicalSolution& solution);

/// Recovers the canonical structure; throws NotCanonical naming the first
/// offending cluster.
CanonicalSolution recognize(const BinaryInstance& inst, const Clustering& p);
bool is_canonical(const BinaryInstance& inst, const Clustering& p);

/// Type b on the cover, type a elsewhere. Every edge gadget goes to its
/// lower-indexed covered endpoint, then ownership is rebalanced along
/// alternating paths so every covered gadget hosts at least one.
CanonicalSolution canonical_from_cover(const BinaryInstance& inst, const VertexCover& cover);
Clustering vc_to_solution(const BinaryInstance& inst, const VertexCover& cover);
VertexCover solution_to_vc(const BinaryInstance& inst, const Clustering& p);

/// 99p + 81(n-p) + 12m.
Cost expected_cost(std::size_t n, std::size_t m, std::size_t cover_size);

using VirtualCost = boost::rational<Cost>;

/// Zero for jolly rows; otherwise the cost of the row's cluster divided by
/// the number of non-jolly rows in it.
VirtualCost virtual_cost(const BinaryInstance& inst, const Clustering& p, std::size_t row);
std::vector<VirtualCost> virtual_costs(const BinaryInstance& inst, const Clustering& p);

/// Turns any feasible solution into a canonical one of no greater cost:
/// cluster sizes are first brought into [3,5], then clusters holding
/// unmarked edge gadgets are visited in index order; each gets a smallest set
/// of endpoint gadgets covering its unmarked edge gadgets, those gadgets take
/// type-b solutions absorbing every still-unmarked incident edge gadget, and
/// all remaining gadgets take type a.
Clustering canonicalize(const BinaryInstance& inst, const Clustering& s1);

/// Random feasible solution for property trials. Half of the draws cut a
/// shuffled row order into blocks of 3..6 rows; the
/// rest take the canonical solution of a random cover and apply a few random
/// feasibility-preserving edits.
Clustering sample_solution(const BinaryInstance& inst, Rng& rng);

}  // namespace anonhard::binary
