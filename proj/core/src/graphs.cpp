#include "anonhard/graphs.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "anonhard/error.hpp"

namespace anonhard {

std::optional<std::size_t> CubicGraph::edge_index(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u == u && edges_[e].v == v) return e;
  }
  return std::nullopt;
}

std::array<std::size_t, 3> CubicGraph::incident_edges(std::size_t v) const {
  std::array<std::size_t, 3> out{};
  const auto& nbrs = neighbors(v);
  for (std::size_t s = 0; s < 3; ++s) out[s] = *edge_index(v, nbrs[s]);
  return out;
}

CubicGraph validate_cubic(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw Error(ErrorKind::NotCubic, "graph has no vertices");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::NotSimple, "edge endpoint out of range (n=" + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw Error(ErrorKind::NotSimple, "loop at vertex " + std::to_string(e.u + 1));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw Error(ErrorKind::NotSimple, "repeated edge " + std::to_string(e.u + 1) + "-" +
                                            std::to_string(e.v + 1));
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  CubicGraph g;
  g.n_ = n;
  g.adjacency_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() != 3) {
      throw Error(ErrorKind::NotCubic, "vertex " + std::to_string(v + 1) + " has degree " +
                                           std::to_string(adj[v].size()));
    }
    std::sort(adj[v].begin(), adj[v].end());
    std::copy(adj[v].begin(), adj[v].end(), g.adjacency_[v].begin());
  }
  g.edges_ = std::move(edges);
  return g;
}

namespace builtin {

CubicGraph k4() {
  return validate_cubic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph k33() {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 3; b < 6; ++b) edges.push_back({a, b});
  }
  return validate_cubic(6, std::move(edges));
}

CubicGraph petersen() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (std::size_t i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (std::size_t i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return validate_cubic(10, std::move(edges));
}

CubicGraph q3() {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < 8; ++v) {
    for (std::size_t bit = 1; bit < 8; bit <<= 1) {
      if (v < (v ^ bit)) edges.push_back({v, v ^ bit});
    }
  }
  return validate_cubic(8, std::move(edges));
}

}  // namespace builtin

std::vector<std::string_view> builtin_names() { return {"k4", "k33", "petersen", "q3"}; }

CubicGraph builtin_graph(std::string_view name) {
  if (name == "k4") return builtin::k4();
  if (name == "k33") return builtin::k33();
  if (name == "petersen") return builtin::petersen();
  if (name == "q3") return builtin::q3();
  throw Error(ErrorKind::Parse, "unknown built-in graph '" + std::string(name) + "'");
}

CubicGraph random_cubic(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::NotCubic, "a cubic graph needs an even vertex count >= 4");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> points(3 * n);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = i / 3;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      auto u = std::min(points[i], points[i + 1]);
      auto v = std::max(points[i], points[i + 1]);
      ok = u != v && seen.emplace(u, v).second;
      edges.push_back({u, v});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return validate_cubic(n, std::move(edges));
  }
  throw Error(ErrorKind::NotCubic, "pairing model did not produce a simple graph");
}

CubicGraph read_dimacs(std::istream& in) {
  std::string line;
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "graph line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (n) fail("duplicate problem line");
      std::string first;
      ss >> first;
      std::size_t vertices = 0;
      if (!first.empty() && std::isdigit(static_cast<unsigned char>(first.front()))) {
        vertices = std::stoul(first);
      } else if (!(ss >> vertices)) {
        fail("expected 'p <n> <m>'");
      }
      if (!(ss >> declared_edges)) fail("expected 'p <n> <m>'");
      n = vertices;
    } else if (tag == "e") {
      if (!n) fail("edge before problem line");
      long long u = 0, v = 0;
      if (!(ss >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *n || static_cast<std::size_t>(v) > *n) {
        fail("vertex out of range 1.." + std::to_string(*n));
      }
      edges.push_back({static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)});
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (!n) throw Error(ErrorKind::Parse, "missing problem line");
  if (edges.size() != declared_edges) {
    throw Error(ErrorKind::Parse, "problem line declares " + std::to_string(declared_edges) +
                                      " edges, found " + std::to_string(edges.size()));
  }
  return validate_cubic(*n, std::move(edges));
}

void write_dimacs(std::ostream& out, const CubicGraph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

VertexCover make_cover(std::vector<std::size_t> vertices, std::size_t n) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (!vertices.empty() && vertices.back() >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "cover vertex " + std::to_string(vertices.back() + 1) +
                                                " exceeds n=" + std::to_string(n));
  }
  return VertexCover{std::move(vertices)};
}

bool is_vertex_cover(const CubicGraph& g, const VertexCover& cover) {
  std::vector<bool> in(g.vertex_count(), false);
  for (auto v : cover.vertices) {
    if (v >= g.vertex_count()) return false;
    in[v] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

void require_cover(const CubicGraph& g, const VertexCover& cover) {
  std::vector<bool> in(g.vertex_count(), false);
  for (auto v : cover.vertices) {
    if (v >= g.vertex_count()) {
      throw Error(ErrorKind::NotACover, "vertex " + std::to_string(v + 1) + " out of range");
    }
    in[v] = true;
  }
  for (const auto& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) {
      throw Error(ErrorKind::NotACover, "edge " + std::to_string(e.u + 1) + "-" +
                                            std::to_string(e.v + 1) + " is uncovered");
    }
  }
}

VertexCover greedy_vertex_cover(const CubicGraph& g) {
  std::vector<bool> matched(g.vertex_count(), false);
  std::vector<std::size_t> cover;
  for (const auto& e : g.edges()) {
    if (matched[e.u] || matched[e.v]) continue;
    matched[e.u] = matched[e.v] = true;
    cover.push_back(e.u);
    cover.push_back(e.v);
  }
  return make_cover(std::move(cover), g.vertex_count());
}

}  // namespace anonhard
