#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace anonhard {

/// Undirected edge, 0-based endpoints with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple 3-regular graph. Only constructible through validate_cubic, so every
/// instance satisfies the invariants.
class CubicGraph {
 public:
  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbors of v in ascending order.
  const std::array<std::size_t, 3>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  /// Index into edges() of edge {u, v}, if present.
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;
  /// The three edge indices incident on v, ordered by ascending neighbor.
  std::array<std::size_t, 3> incident_edges(std::size_t v) const;

  friend CubicGraph validate_cubic(std::size_t n, std::vector<Edge> edges);

 private:
  CubicGraph() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::array<std::size_t, 3>> adjacency_;
};

/// Throws NotSimple (loop, repeated edge, endpoint out of range) or NotCubic
/// (names the first vertex whose degree is not 3). Endpoints are normalized to
/// u < v; edge order is preserved.
CubicGraph validate_cubic(std::size_t n, std::vector<Edge> edges);

namespace builtin {
CubicGraph k4();
CubicGraph k33();
CubicGraph petersen();
CubicGraph q3();
}  // namespace builtin

/// "k4", "k33", "petersen" or "q3"; throws Error(Parse) otherwise.
CubicGraph builtin_graph(std::string_view name);
std::vector<std::string_view> builtin_names();

/// Uniform-ish random cubic graph on n vertices (n even, n >= 4) by the
/// pairing model with rejection of loops and repeated edges.
CubicGraph random_cubic(std::size_t n, std::uint64_t seed);

/// DIMACS-like text: `p <n> <m>` followed by `e <u> <v>` lines, 1-based.
/// Lines starting with `c` are comments.
CubicGraph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CubicGraph& g);

struct VertexCover {
  std::vector<std::size_t> vertices;  // sorted, 0-based
  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const VertexCover&, const VertexCover&) = default;
};

/// Sorts and deduplicates; throws IndexOutOfRange for vertices >= n.
VertexCover make_cover(std::vector<std::size_t> vertices, std::size_t n);
bool is_vertex_cover(const CubicGraph& g, const VertexCover& cover);
/// Throws NotACover naming an uncovered edge.
void require_cover(const CubicGraph& g, const VertexCover& cover);

/// Minimum vertex cover by branch and bound. Supports up to 64 vertices
/// (throws TooLarge beyond that); practical up to a few dozen.
VertexCover exact_vertex_cover(const CubicGraph& g);

/// Both endpoints of a greedy maximal matching (2-approximation).
VertexCover greedy_vertex_cover(const CubicGraph& g);

}  // namespace anonhard
