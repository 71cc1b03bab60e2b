#include <algorithm>
#include <sstream>

#include "anonhard/error.hpp"
#include "anonhard/width8_reduction.hpp"

namespace anonhard::width8 {

BlockAssignment assign_blocks(const CubicGraph& g) {
  BlockAssignment out;
  out.block.assign(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::array<bool, kBlocks + 1> used{};
    for (auto w : g.neighbors(v)) used[static_cast<std::size_t>(out.block[w])] = true;
    int b = 1;
    while (used[static_cast<std::size_t>(b)]) ++b;
    out.block[v] = b;
  }
  return out;
}

bool is_proper(const CubicGraph& g, const BlockAssignment& blocks) {
  if (blocks.block.size() != g.vertex_count()) return false;
  for (auto b : blocks.block) {
    if (b < 1 || b > static_cast<int>(kBlocks)) return false;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return blocks.block[e.u] != blocks.block[e.v]; });
}

std::string describe(const Provenance& p) {
  std::ostringstream out;
  if (const auto* r = std::get_if<VertexRow>(&p)) {
    out << "R(" << r->vertex + 1 << ")#" << r->h;
  } else if (const auto* e = std::get_if<EdgeRow>(&p)) {
    out << "r(" << e->u + 1 << "," << e->v + 1 << ")";
  } else {
    out << "f" << std::get<FreeRow>(p).index;
  }
  return out.str();
}

namespace {

// 0-based columns of block b (1..4).
bool in_block(std::size_t column, int block) {
  return column / 2 == static_cast<std::size_t>(block - 1);
}

}  // namespace

Width8Instance::Width8Instance(const CubicGraph& graph)
    : graph_(graph),
      blocks_(assign_blocks(graph)),
      provenance_{},
      instance_([this] {
        std::vector<Row> rows;
        const std::size_t n = graph_.vertex_count();
        for (std::size_t v = 0; v < n; ++v) {
          const auto label = static_cast<std::uint32_t>(v + 1);
          for (int h = 1; h <= static_cast<int>(kRowsPerVertex); ++h) {
            Row row(kWidth);
            for (std::size_t c = 0; c < kWidth; ++c) {
              // c even <=> 1-based column odd
              const bool shared = c % 2 == 0 || in_block(c, blocks_.block[v]);
              row[c] = shared ? Symbol::vertex(label)
                              : Symbol::vertex_row(label, static_cast<std::uint32_t>(h));
            }
            rows.push_back(std::move(row));
            provenance_.emplace_back(VertexRow{v, h});
          }
        }
        for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
          const auto& edge = graph_.edges()[e];
          Row row(kWidth);
          for (std::size_t c = 0; c < kWidth; ++c) {
            if (in_block(c, blocks_.block[edge.u])) {
              row[c] = Symbol::vertex(static_cast<std::uint32_t>(edge.u + 1));
            } else if (in_block(c, blocks_.block[edge.v])) {
              row[c] = Symbol::vertex(static_cast<std::uint32_t>(edge.v + 1));
            } else {
              row[c] = Symbol::edge(static_cast<std::uint32_t>(edge.u + 1),
                                    static_cast<std::uint32_t>(edge.v + 1));
            }
          }
          rows.push_back(std::move(row));
          provenance_.emplace_back(EdgeRow{e, edge.u, edge.v});
        }
        for (int f = 1; f <= static_cast<int>(kFreeRows); ++f) {
          rows.emplace_back(kWidth, Symbol::free_row(static_cast<std::uint32_t>(f)));
          provenance_.emplace_back(FreeRow{f});
        }
        return Instance(std::move(rows), kAnonymity);
      }()) {}

std::size_t Width8Instance::vertex_row(std::size_t vertex, int h) const {
  return kRowsPerVertex * vertex + static_cast<std::size_t>(h - 1);
}

std::size_t Width8Instance::edge_row(std::size_t source_edge) const {
  return kRowsPerVertex * graph_.vertex_count() + source_edge;
}

std::size_t Width8Instance::free_row(int index) const {
  return kRowsPerVertex * graph_.vertex_count() + graph_.edge_count() +
         static_cast<std::size_t>(index - 1);
}

Cluster Width8Instance::vertex_rows(std::size_t vertex) const {
  Cluster c;
  for (int h = 1; h <= static_cast<int>(kRowsPerVertex); ++h) c.push_back(vertex_row(vertex, h));
  return c;
}

Cluster Width8Instance::incident_edge_rows(std::size_t vertex) const {
  Cluster c;
  for (auto e : graph_.incident_edges(vertex)) c.push_back(edge_row(e));
  std::sort(c.begin(), c.end());
  return c;
}

bool Width8Instance::in_neighborhood(std::size_t row, std::size_t vertex) const {
  const auto& p = provenance(row);
  if (const auto* r = std::get_if<VertexRow>(&p)) return r->vertex == vertex;
  if (const auto* e = std::get_if<EdgeRow>(&p)) return e->u == vertex || e->v == vertex;
  return false;
}

Width8Instance build_instance(const CubicGraph& graph) { return Width8Instance(graph); }

LocalityReport verify_locality(const Width8Instance& inst, const Clustering& p) {
  const auto& table = inst.instance();
  if (!is_feasible(table, p)) {
    throw Error(ErrorKind::Infeasible, "locality check needs clusters of at least 4 rows");
  }
  LocalityReport report;
  const std::size_t n = inst.graph().vertex_count();
  for (std::size_t ci = 0; ci < p.clusters.size(); ++ci) {
    const auto& cluster = p.clusters[ci];
    const auto suppressed = suppressed_columns(table, cluster);
    if (suppressed.size() < kWidth) {
      ++report.cheap_clusters;
      bool local = false;
      for (std::size_t v = 0; v < n && !local; ++v) {
        local = std::all_of(cluster.begin(), cluster.end(),
                            [&](std::size_t r) { return inst.in_neighborhood(r, v); });
      }
      if (!local) {
        ++report.locality_violations;
        report.messages.push_back("cluster " + std::to_string(ci) +
                                  " pays less than 8 per row but spans several vertices");
      }
    }
    for (auto r : cluster) {
      const auto* vr = std::get_if<VertexRow>(&inst.provenance(r));
      if (!vr) continue;
      ++report.vertex_rows;
      const int block = inst.blocks().block[vr->vertex];
      const auto even_outside = std::count_if(suppressed.begin(), suppressed.end(), [&](std::size_t c) {
        return c % 2 == 1 && !in_block(c, block);
      });
      if (even_outside < 3) {
        ++report.low_bound_violations;
        report.messages.push_back("row " + describe(inst.provenance(r)) + " has only " +
                                  std::to_string(even_outside) +
                                  " even columns suppressed outside its edge block");
      }
    }
  }
  return report;
}

}  // namespace anonhard::width8
