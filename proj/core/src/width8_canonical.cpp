#include <algorithm>
#include <optional>

#include "anonhard/error.hpp"
#include "anonhard/width8_reduction.hpp"

namespace anonhard::width8 {

std::vector<Cluster> build_red(const Width8Instance& inst, std::size_t vertex) {
  if (vertex >= inst.graph().vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(vertex));
  }
  return {inst.vertex_rows(vertex)};
}

std::vector<Cluster> build_black(const Width8Instance& inst, std::size_t vertex) {
  if (vertex >= inst.graph().vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(vertex));
  }
  Cluster four = inst.vertex_rows(vertex);
  Cluster dock{four.back()};
  four.pop_back();
  for (auto r : inst.incident_edge_rows(vertex)) dock.push_back(r);
  return {four, dock};
}

Clustering expand(const Width8Instance& inst, const CanonicalSolution& solution) {
  const auto& g = inst.graph();
  if (solution.color.size() != g.vertex_count()) {
    throw Error(ErrorKind::NotCanonical, "canonical solution does not match the graph size");
  }
  for (const auto& e : g.edges()) {
    if (solution.color[e.u] == VertexColor::Black && solution.color[e.v] == VertexColor::Black) {
      throw Error(ErrorKind::EdgeRowConflict, "adjacent vertices " + std::to_string(e.u + 1) +
                                                  " and " + std::to_string(e.v + 1) +
                                                  " are both black");
    }
  }
  Clustering p;
  Cluster filler;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    if (solution.color[edge.u] == VertexColor::Red && solution.color[edge.v] == VertexColor::Red) {
      filler.push_back(inst.edge_row(e));
    }
  }
  for (int f = 1; f <= static_cast<int>(kFreeRows); ++f) filler.push_back(inst.free_row(f));
  p.clusters.push_back(std::move(filler));
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto part = solution.color[v] == VertexColor::Red ? build_red(inst, v) : build_black(inst, v);
    p.clusters.insert(p.clusters.end(), part.begin(), part.end());
  }
  return p;
}

namespace {

struct Composition {
  std::vector<std::size_t> vertex_rows;  // vertex of each R row
  std::size_t edge_rows = 0;
  std::size_t free_rows = 0;
};

Composition compose(const Width8Instance& inst, const Cluster& c) {
  Composition out;
  for (auto r : c) {
    const auto& p = inst.provenance(r);
    if (const auto* v = std::get_if<VertexRow>(&p)) out.vertex_rows.push_back(v->vertex);
    else if (std::holds_alternative<EdgeRow>(p)) ++out.edge_rows;
    else ++out.free_rows;
  }
  return out;
}

}  // namespace

CanonicalSolution recognize(const Width8Instance& inst, const Clustering& p) {
  const auto& g = inst.graph();
  validate_partition(p, inst.instance().size());
  const std::size_t n = g.vertex_count();
  std::vector<int> red(n, 0), black_four(n, 0), black_dock(n, 0);
  std::size_t fillers = 0;
  auto fail = [&](std::size_t ci, const std::string& why) {
    throw Error(ErrorKind::NotCanonical, "cluster " + std::to_string(ci) + ": " + why);
  };

  for (std::size_t ci = 0; ci < p.clusters.size(); ++ci) {
    const auto& c = p.clusters[ci];
    const auto comp = compose(inst, c);
    if (comp.free_rows > 0) {
      if (comp.free_rows != kFreeRows || !comp.vertex_rows.empty()) {
        fail(ci, "filler must hold all free rows and only edge rows besides");
      }
      ++fillers;
      continue;
    }
    if (comp.vertex_rows.empty()) fail(ci, "edge rows outside the filler and black clusters");
    const auto v = comp.vertex_rows.front();
    if (std::any_of(comp.vertex_rows.begin(), comp.vertex_rows.end(),
                    [&](std::size_t w) { return w != v; })) {
      fail(ci, "mixes rows of several vertices");
    }
    if (comp.vertex_rows.size() == kRowsPerVertex && comp.edge_rows == 0) {
      ++red[v];
    } else if (comp.vertex_rows.size() == 4 && comp.edge_rows == 0) {
      ++black_four[v];
    } else if (comp.vertex_rows.size() == 1 && comp.edge_rows == 3) {
      Cluster edges;
      for (auto r : c) {
        if (std::holds_alternative<EdgeRow>(inst.provenance(r))) edges.push_back(r);
      }
      std::sort(edges.begin(), edges.end());
      if (edges != inst.incident_edge_rows(v)) fail(ci, "edge rows not incident on the vertex");
      ++black_dock[v];
    } else {
      fail(ci, "neither red, black nor filler");
    }
  }
  if (fillers != 1) {
    throw Error(ErrorKind::NotCanonical, "expected exactly one filler cluster");
  }
  CanonicalSolution out;
  for (std::size_t v = 0; v < n; ++v) {
    if (red[v] == 1 && black_four[v] == 0 && black_dock[v] == 0) {
      out.color.push_back(VertexColor::Red);
    } else if (red[v] == 0 && black_four[v] == 1 && black_dock[v] == 1) {
      out.color.push_back(VertexColor::Black);
    } else {
      throw Error(ErrorKind::NotCanonical, "R(" + std::to_string(v + 1) + ") is neither red nor black");
    }
  }
  return out;
}

bool is_canonical(const Width8Instance& inst, const Clustering& p) {
  try {
    recognize(inst, p);
    return true;
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotCanonical) return false;
    throw;
  }
}

Clustering vc_to_solution(const Width8Instance& inst, const VertexCover& cover) {
  require_cover(inst.graph(), cover);
  CanonicalSolution s;
  s.color.assign(inst.graph().vertex_count(), VertexColor::Black);
  for (auto v : cover.vertices) s.color[v] = VertexColor::Red;
  return expand(inst, s);
}

VertexCover solution_to_vc(const Width8Instance& inst, const Clustering& p) {
  const auto s = recognize(inst, p);
  std::vector<std::size_t> red;
  for (std::size_t v = 0; v < s.color.size(); ++v) {
    if (s.color[v] == VertexColor::Red) red.push_back(v);
  }
  VertexCover out{std::move(red)};
  require_cover(inst.graph(), out);
  return out;
}

Cost expected_cost(std::size_t n, std::size_t m, std::size_t cover_size) {
  const auto p = static_cast<Cost>(cover_size);
  return 12 * (static_cast<Cost>(n) - p) + 15 * p + 8 * static_cast<Cost>(m) + 32;
}

namespace {

bool holds_vertex_row(const Width8Instance& inst, const Cluster& c, std::size_t v) {
  return std::any_of(c.begin(), c.end(), [&](std::size_t r) {
    const auto* vr = std::get_if<VertexRow>(&inst.provenance(r));
    return vr && vr->vertex == v;
  });
}

bool is_local(const Width8Instance& inst, const Cluster& c, std::size_t v) {
  return std::all_of(c.begin(), c.end(), [&](std::size_t r) { return inst.in_neighborhood(r, v); });
}

void append(Cluster& to, const Cluster& from) { to.insert(to.end(), from.begin(), from.end()); }

}  // namespace

Clustering canonicalize(const Width8Instance& inst, const Clustering& s) {
  const auto& table = inst.instance();
  if (!is_feasible(table, s)) {
    throw Error(ErrorKind::Infeasible, "input clustering has a cluster smaller than 4");
  }
  const std::size_t n = inst.graph().vertex_count();

  // Stage 1: one filler for every cluster whose rows all pay the full width.
  Cluster filler;
  std::vector<Cluster> rest;
  for (const auto& c : s.clusters) {
    if (suppressed_count(table, c) == kWidth) append(filler, c);
    else rest.push_back(c);
  }

  // Stage 2: at most two clusters per R_v.
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> hosts;
    for (std::size_t ci = 0; ci < rest.size(); ++ci) {
      if (holds_vertex_row(inst, rest[ci], v)) hosts.push_back(ci);
    }
    const std::size_t total = hosts.size() + (holds_vertex_row(inst, filler, v) ? 1 : 0);
    if (total <= 2) continue;
    std::vector<Cluster> kept;
    for (std::size_t ci = 0; ci < rest.size(); ++ci) {
      const bool host = std::find(hosts.begin(), hosts.end(), ci) != hosts.end();
      if (host && !is_local(inst, rest[ci], v)) append(filler, rest[ci]);
      else kept.push_back(std::move(rest[ci]));
    }
    rest = std::move(kept);
  }

  // Stage 3: the filler keeps only free rows and edge rows.
  for (std::size_t v = 0; v < n; ++v) {
    Cluster moving;
    std::erase_if(filler, [&](std::size_t r) {
      const auto* vr = std::get_if<VertexRow>(&inst.provenance(r));
      if (vr && vr->vertex == v) {
        moving.push_back(r);
        return true;
      }
      return false;
    });
    if (moving.empty()) continue;
    auto host = std::find_if(rest.begin(), rest.end(),
                             [&](const Cluster& c) { return holds_vertex_row(inst, c, v); });
    if (host == rest.end()) rest.push_back(std::move(moving));
    else append(*host, moving);
  }

  // Stage 4: resolve the two non-canonical shapes.
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> hosts;
    for (std::size_t ci = 0; ci < rest.size(); ++ci) {
      if (holds_vertex_row(inst, rest[ci], v)) hosts.push_back(ci);
    }
    if (hosts.size() == 1) {
      auto& c = rest[hosts.front()];
      if (c.size() == kRowsPerVertex) continue;  // red
      // R_v together with some edge rows: keep R_v, edge rows go to filler.
      Cluster extra;
      for (auto r : c) {
        if (!std::holds_alternative<VertexRow>(inst.provenance(r))) extra.push_back(r);
      }
      append(filler, extra);
      c = inst.vertex_rows(v);
    } else if (hosts.size() == 2) {
      auto& a = rest[hosts[0]];
      auto& b = rest[hosts[1]];
      const auto count_r = [&](const Cluster& c) {
        return std::count_if(c.begin(), c.end(), [&](std::size_t r) {
          return std::holds_alternative<VertexRow>(inst.provenance(r));
        });
      };
      const auto ra = count_r(a);
      const auto rb = count_r(b);
      const bool black = (ra == 4 && a.size() == 4 && rb == 1 && b.size() == 4) ||
                         (rb == 4 && b.size() == 4 && ra == 1 && a.size() == 4);
      if (black) continue;
      // Both hosts live inside R_v u E(R_v), which has exactly eight rows, so
      // together they hold R_v and all of E(R_v).
      if (a.size() + b.size() != kRowsPerVertex + 3 || !is_local(inst, a, v) ||
          !is_local(inst, b, v)) {
        throw Error(ErrorKind::Infeasible,
                    "R(" + std::to_string(v + 1) + ") shares clusters outside its neighborhood");
      }
      auto parts = build_black(inst, v);
      a = std::move(parts[0]);
      b = std::move(parts[1]);
    } else {
      throw Error(ErrorKind::Infeasible, "R(" + std::to_string(v + 1) +
                                             ") spread over an unexpected number of clusters");
    }
  }

  Clustering out;
  out.clusters.push_back(std::move(filler));
  for (auto& c : rest) {
    if (!c.empty()) out.clusters.push_back(std::move(c));
  }
  return out;
}

Clustering sample_solution(const Width8Instance& inst, Rng& rng) {
  const auto& table = inst.instance();
  if (std::bernoulli_distribution(0.5)(rng)) {
    return normalize_cluster_sizes(table, random_partition(table.size(), table.k(), 4, 7, rng));
  }
  const auto cover = random_cover(inst.graph(), rng);
  const auto moves = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
  return perturb(vc_to_solution(inst, cover), table.k(), moves, rng);
}

}  // namespace anonhard::width8
