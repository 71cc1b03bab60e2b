#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "anonhard/binary_reduction.hpp"
#include "anonhard/error.hpp"

namespace anonhard::binary {

namespace {

std::string cluster_text(const Cluster& c) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << '}';
  return out.str();
}

Cluster core_rows_at(const BinaryInstance& inst, std::size_t gadget, int core_vertex) {
  Cluster c;
  for (auto e : core_edges_at(core_vertex)) c.push_back(inst.core_row(gadget, e));
  return c;
}

void check_gadget(const BinaryInstance& inst, std::size_t gadget) {
  if (gadget >= inst.layout().n) {
    throw Error(ErrorKind::IndexOutOfRange, "gadget " + std::to_string(gadget));
  }
}

}  // namespace

std::vector<Cluster> build_type_a(const BinaryInstance& inst, std::size_t gadget) {
  check_gadget(inst, gadget);
  std::vector<Cluster> clusters;
  for (int center : {4, 5, 7}) clusters.push_back(core_rows_at(inst, gadget, center));
  for (int x = 1; x <= 3; ++x) {
    Cluster jolly;
    for (int copy = 1; copy <= 4; ++copy) jolly.push_back(inst.jolly_row(gadget, x, copy));
    clusters.push_back(std::move(jolly));
  }
  return clusters;
}

std::vector<Cluster> build_type_b(const BinaryInstance& inst, std::size_t gadget,
                                  const std::array<bool, kDockingVertices>& with_edge_gadget) {
  check_gadget(inst, gadget);
  if (std::none_of(with_edge_gadget.begin(), with_edge_gadget.end(), [](bool b) { return b; })) {
    throw Error(ErrorKind::NoEdgeGadgetAssigned,
                "type-b solution of gadget " + std::to_string(gadget + 1) + " holds no edge gadget");
  }
  std::vector<Cluster> clusters{core_rows_at(inst, gadget, 6)};
  std::vector<Cluster> leftovers;
  for (int x = 1; x <= 3; ++x) {
    Cluster dock = core_rows_at(inst, gadget, x);
    int first_free_copy = 1;
    if (with_edge_gadget[static_cast<std::size_t>(x - 1)]) {
      dock.push_back(inst.edge_gadget_row(inst.gadgets().docking[gadget][static_cast<std::size_t>(x - 1)]));
    } else {
      dock.push_back(inst.jolly_row(gadget, x, 1));
      first_free_copy = 2;
    }
    clusters.push_back(std::move(dock));
    Cluster rest;
    for (int copy = first_free_copy; copy <= 4; ++copy) rest.push_back(inst.jolly_row(gadget, x, copy));
    leftovers.push_back(std::move(rest));
  }
  clusters.insert(clusters.end(), leftovers.begin(), leftovers.end());
  return clusters;
}

Clustering expand(const BinaryInstance& inst, const CanonicalSolution& solution) {
  const auto& g = inst.graph();
  const std::size_t n = g.vertex_count();
  if (solution.type.size() != n || solution.edge_owner.size() != g.edge_count()) {
    throw Error(ErrorKind::NotCanonical, "canonical solution does not match the graph size");
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto owner = solution.edge_owner[e];
    const auto& edge = g.edges()[e];
    if (owner != edge.u && owner != edge.v) {
      throw Error(ErrorKind::NotCanonical, "edge gadget " + std::to_string(e) +
                                               " owned by non-endpoint gadget " +
                                               std::to_string(owner + 1));
    }
    if (solution.type[owner] != GadgetType::B) {
      throw Error(ErrorKind::NotCanonical, "edge gadget " + std::to_string(e) +
                                               " owned by type-a gadget " +
                                               std::to_string(owner + 1));
    }
  }
  Clustering p;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Cluster> part;
    if (solution.type[i] == GadgetType::A) {
      part = build_type_a(inst, i);
    } else {
      std::array<bool, kDockingVertices> with{};
      for (std::size_t slot = 0; slot < kDockingVertices; ++slot) {
        with[slot] = solution.edge_owner[inst.gadgets().docking[i][slot]] == i;
      }
      try {
        part = build_type_b(inst, i, with);
      } catch (const Error& err) {
        throw Error(ErrorKind::NotCanonical, err.what());
      }
    }
    p.clusters.insert(p.clusters.end(), part.begin(), part.end());
  }
  return p;
}

namespace {

struct Star {
  std::size_t gadget;
  int center;
};
struct Dock {
  std::size_t gadget;
  int docking;
  bool edge_gadget;
};
struct JollyRest {
  std::size_t gadget;
  int docking;
  std::size_t size;
};
using Piece = std::variant<Star, Dock, JollyRest>;

std::optional<Piece> classify(const BinaryInstance& inst, const Cluster& cluster) {
  std::vector<CoreEdgeRow> core;
  std::vector<JollyRow> jolly;
  std::vector<EdgeGadgetRow> edges;
  for (auto r : cluster) {
    const auto& p = inst.provenance(r);
    if (const auto* c = std::get_if<CoreEdgeRow>(&p)) core.push_back(*c);
    else if (const auto* j = std::get_if<JollyRow>(&p)) jolly.push_back(*j);
    else edges.push_back(std::get<EdgeGadgetRow>(p));
  }

  if (core.empty() && edges.empty()) {
    const bool one_set = std::all_of(jolly.begin(), jolly.end(), [&](const JollyRow& j) {
      return j.gadget == jolly.front().gadget && j.docking == jolly.front().docking;
    });
    if (one_set && jolly.size() >= kAnonymity) {
      return JollyRest{jolly.front().gadget, jolly.front().docking, jolly.size()};
    }
    return std::nullopt;
  }

  // Remaining shapes hold core rows of exactly one gadget.
  if (core.empty()) return std::nullopt;
  const std::size_t gadget = core.front().gadget;
  for (const auto& c : core) {
    if (c.gadget != gadget) return std::nullopt;
  }
  auto core_set_at = [&](int vertex) {
    std::set<std::size_t> want;
    for (auto e : core_edges_at(vertex)) want.insert(e);
    std::set<std::size_t> have;
    for (const auto& c : core) have.insert(c.edge);
    return want == have;
  };

  if (core.size() == 3 && jolly.empty() && edges.empty()) {
    for (int center : {4, 5, 6, 7}) {
      if (core_set_at(center)) return Star{gadget, center};
    }
    return std::nullopt;
  }
  if (core.size() == 2 && jolly.size() + edges.size() == 1) {
    for (int x = 1; x <= 3; ++x) {
      if (!core_set_at(x)) continue;
      if (jolly.size() == 1) {
        if (jolly.front().gadget == gadget && jolly.front().docking == x) {
          return Dock{gadget, x, false};
        }
        return std::nullopt;
      }
      const auto& eg = edges.front();
      const std::size_t docked = inst.gadgets().docking[gadget][static_cast<std::size_t>(x - 1)];
      if (eg.source_edge == docked) return Dock{gadget, x, true};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

struct GadgetPieces {
  std::set<int> stars;
  std::map<int, bool> docks;                 // docking -> holds edge gadget
  std::map<int, std::vector<std::size_t>> rests;  // docking -> sizes
};

}  // namespace

CanonicalSolution recognize(const BinaryInstance& inst, const Clustering& p) {
  const auto& g = inst.graph();
  validate_partition(p, inst.instance().size());
  const std::size_t n = g.vertex_count();
  std::vector<GadgetPieces> pieces(n);
  CanonicalSolution out;
  out.type.assign(n, GadgetType::A);
  out.edge_owner.assign(g.edge_count(), n);

  for (std::size_t ci = 0; ci < p.clusters.size(); ++ci) {
    auto piece = classify(inst, p.clusters[ci]);
    if (!piece) {
      throw Error(ErrorKind::NotCanonical, "cluster " + std::to_string(ci) + " " +
                                               cluster_text(p.clusters[ci]) +
                                               " is not a canonical cluster");
    }
    if (const auto* s = std::get_if<Star>(&*piece)) {
      pieces[s->gadget].stars.insert(s->center);
    } else if (const auto* d = std::get_if<Dock>(&*piece)) {
      pieces[d->gadget].docks[d->docking] = d->edge_gadget;
      if (d->edge_gadget) {
        out.edge_owner[inst.gadgets().docking[d->gadget][static_cast<std::size_t>(d->docking - 1)]] =
            d->gadget;
      }
    } else {
      const auto& r = std::get<JollyRest>(*piece);
      pieces[r.gadget].rests[r.docking].push_back(r.size);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& gp = pieces[i];
    const auto where = "gadget " + std::to_string(i + 1);
    if (gp.stars == std::set<int>{4, 5, 7} && gp.docks.empty()) {
      out.type[i] = GadgetType::A;
      continue;
    }
    if (gp.stars == std::set<int>{6} && gp.docks.size() == kDockingVertices) {
      const bool any_edge = std::any_of(gp.docks.begin(), gp.docks.end(),
                                        [](const auto& kv) { return kv.second; });
      if (!any_edge) {
        throw Error(ErrorKind::NotCanonical, where + " is type b without an edge gadget");
      }
      out.type[i] = GadgetType::B;
      continue;
    }
    throw Error(ErrorKind::NotCanonical, where + " is neither type a nor type b");
  }
  // A partition whose every cluster is a canonical piece and whose gadgets
  // all have a valid star/dock pattern also places every jolly row in a
  // single leftover cluster per docking vertex; check it anyway.
  for (std::size_t i = 0; i < n; ++i) {
    for (int x = 1; x <= 3; ++x) {
      const auto& sizes = pieces[i].rests.count(x) ? pieces[i].rests.at(x) : std::vector<std::size_t>{};
      const bool jolly_in_dock = pieces[i].docks.count(x) && !pieces[i].docks.at(x);
      const std::size_t want = jolly_in_dock ? 3 : 4;
      if (sizes.size() != 1 || sizes.front() != want) {
        throw Error(ErrorKind::NotCanonical, "jolly rows of gadget " + std::to_string(i + 1) +
                                                 " docking c" + std::to_string(x) +
                                                 " are not clustered canonically");
      }
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (out.edge_owner[e] == n) {
      throw Error(ErrorKind::NotCanonical,
                  "edge gadget " + std::to_string(e) + " is not in a docking cluster");
    }
  }
  return out;
}

bool is_canonical(const BinaryInstance& inst, const Clustering& p) {
  try {
    recognize(inst, p);
    return true;
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NotCanonical) return false;
    throw;
  }
}

namespace {

// Moves edge-gadget ownership along alternating paths until every type-b
// gadget owns at least one edge gadget. Each set S of cubic vertices touches
// at least 3|S|/2 edges, so Hall's condition guarantees success.
void rebalance_owners(const CubicGraph& g, const std::vector<GadgetType>& type,
                      std::vector<std::size_t>& owner) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> owned(n, 0);
  for (auto o : owner) ++owned[o];

  for (std::size_t start = 0; start < n; ++start) {
    if (type[start] != GadgetType::B || owned[start] > 0) continue;
    // BFS over gadgets; parent_edge[v] is the edge v takes from its successor.
    std::vector<std::size_t> via(n, g.edge_count());
    std::vector<std::size_t> parent(n, n);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::optional<std::size_t> donor;
    while (!queue.empty() && !donor) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto e : g.incident_edges(x)) {
        const auto y = owner[e];
        if (y == x || seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        via[y] = e;
        if (owned[y] >= 2) {
          donor = y;
          break;
        }
        queue.push_back(y);
      }
    }
    if (!donor) {
      throw Error(ErrorKind::NoEdgeGadgetAssigned,
                  "cannot give gadget " + std::to_string(start + 1) + " an edge gadget");
    }
    --owned[*donor];
    ++owned[start];
    for (auto y = *donor; y != start; y = parent[y]) owner[via[y]] = parent[y];
  }
}

}  // namespace

CanonicalSolution canonical_from_cover(const BinaryInstance& inst, const VertexCover& cover) {
  const auto& g = inst.graph();
  require_cover(g, cover);
  CanonicalSolution s;
  s.type.assign(g.vertex_count(), GadgetType::A);
  for (auto v : cover.vertices) s.type[v] = GadgetType::B;
  for (const auto& e : g.edges()) {
    s.edge_owner.push_back(s.type[e.u] == GadgetType::B ? e.u : e.v);
  }
  rebalance_owners(g, s.type, s.edge_owner);
  return s;
}

Clustering vc_to_solution(const BinaryInstance& inst, const VertexCover& cover) {
  return expand(inst, canonical_from_cover(inst, cover));
}

VertexCover solution_to_vc(const BinaryInstance& inst, const Clustering& p) {
  const auto s = recognize(inst, p);
  std::vector<std::size_t> cover;
  for (std::size_t i = 0; i < s.type.size(); ++i) {
    if (s.type[i] == GadgetType::B) cover.push_back(i);
  }
  VertexCover out{std::move(cover)};
  require_cover(inst.graph(), out);
  return out;
}

Cost expected_cost(std::size_t n, std::size_t m, std::size_t cover_size) {
  const auto p = static_cast<Cost>(cover_size);
  return 99 * p + 81 * (static_cast<Cost>(n) - p) + 12 * static_cast<Cost>(m);
}

VirtualCost virtual_cost(const BinaryInstance& inst, const Clustering& p, std::size_t row) {
  if (inst.provenance().size() != inst.instance().size()) {
    throw Error(ErrorKind::MissingProvenance, "provenance does not cover every row");
  }
  const auto owner = cluster_index(p, inst.instance().size());
  if (row >= owner.size()) throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(row));
  if (inst.is_jolly(row)) return 0;
  const auto& cluster = p.clusters[owner[row]];
  const auto non_jolly = std::count_if(cluster.begin(), cluster.end(),
                                       [&](std::size_t r) { return !inst.is_jolly(r); });
  return VirtualCost(cluster_cost(inst.instance(), cluster), static_cast<Cost>(non_jolly));
}

std::vector<VirtualCost> virtual_costs(const BinaryInstance& inst, const Clustering& p) {
  validate_partition(p, inst.instance().size());
  std::vector<VirtualCost> out(inst.instance().size(), VirtualCost(0));
  for (const auto& cluster : p.clusters) {
    const auto non_jolly = std::count_if(cluster.begin(), cluster.end(),
                                         [&](std::size_t r) { return !inst.is_jolly(r); });
    if (non_jolly == 0) continue;
    const VirtualCost share(cluster_cost(inst.instance(), cluster), static_cast<Cost>(non_jolly));
    for (auto r : cluster) {
      if (!inst.is_jolly(r)) out[r] = share;
    }
  }
  return out;
}

namespace {

// Smallest set of gadgets hitting an endpoint of every edge in `edges`; ties
// go to the lexicographically smallest sorted gadget list.
std::vector<std::size_t> smallest_endpoint_cover(const BinaryInstance& inst,
                                                 const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> candidates;
  for (auto e : edges) {
    const auto& eg = inst.gadgets().edge_gadgets[e];
    candidates.push_back(eg.gadget_i);
    candidates.push_back(eg.gadget_j);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const std::size_t c = candidates.size();
  for (std::size_t size = 1; size <= c; ++size) {
    // Lexicographic enumeration of size-element index combinations.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<std::size_t> chosen;
      for (auto i : pick) chosen.push_back(candidates[i]);
      const bool covers = std::all_of(edges.begin(), edges.end(), [&](std::size_t e) {
        const auto& eg = inst.gadgets().edge_gadgets[e];
        return std::binary_search(chosen.begin(), chosen.end(), eg.gadget_i) ||
               std::binary_search(chosen.begin(), chosen.end(), eg.gadget_j);
      });
      if (covers) return chosen;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == c - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return candidates;
}

}  // namespace

Clustering canonicalize(const BinaryInstance& inst, const Clustering& s1) {
  const auto& table = inst.instance();
  if (!is_feasible(table, s1)) {
    throw Error(ErrorKind::Infeasible, "input clustering has a cluster smaller than 3");
  }
  const Clustering sized = normalize_cluster_sizes(table, s1);
  const auto& g = inst.graph();
  const std::size_t n = g.vertex_count();

  CanonicalSolution out;
  out.type.assign(n, GadgetType::A);
  out.edge_owner.assign(g.edge_count(), n);
  std::vector<bool> gadget_marked(n, false);
  std::vector<bool> edge_marked(g.edge_count(), false);

  // Marks only ever grow, so one pass in cluster order visits exactly the
  // clusters the "lowest index with an unmarked edge gadget" rule would pick.
  for (const auto& cluster : sized.clusters) {
    std::vector<std::size_t> unmarked;
    for (auto r : cluster) {
      if (const auto* eg = std::get_if<EdgeGadgetRow>(&inst.provenance(r))) {
        if (!edge_marked[eg->source_edge]) unmarked.push_back(eg->source_edge);
      }
    }
    if (unmarked.empty()) continue;
    std::sort(unmarked.begin(), unmarked.end());

    std::vector<std::size_t> hosts;
    if (unmarked.size() == 1) {
      // An edge gadget clustered only with rows of one of its endpoint
      // gadgets goes to that gadget.
      const auto& eg = inst.gadgets().edge_gadgets[unmarked.front()];
      std::optional<std::size_t> only;
      bool single = true;
      for (auto r : cluster) {
        if (inst.is_edge_gadget(r)) {
          if (std::get<EdgeGadgetRow>(inst.provenance(r)).source_edge != eg.source_edge) single = false;
          continue;
        }
        const auto gi = inst.gadget_of(r);
        if (only && *only != gi) single = false;
        only = gi;
      }
      if (single && only && (*only == eg.gadget_i || *only == eg.gadget_j)) hosts = {*only};
    }
    if (hosts.empty()) hosts = smallest_endpoint_cover(inst, unmarked);

    for (auto h : hosts) {
      gadget_marked[h] = true;
      out.type[h] = GadgetType::B;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (edge_marked[e]) continue;
      const auto& edge = g.edges()[e];
      const bool u_host = std::binary_search(hosts.begin(), hosts.end(), edge.u);
      const bool v_host = std::binary_search(hosts.begin(), hosts.end(), edge.v);
      if (!u_host && !v_host) continue;
      edge_marked[e] = true;
      out.edge_owner[e] = u_host ? edge.u : edge.v;
    }
  }
  return expand(inst, out);
}

Clustering sample_solution(const BinaryInstance& inst, Rng& rng) {
  const auto& table = inst.instance();
  if (std::bernoulli_distribution(0.5)(rng)) {
    return random_partition(table.size(), table.k(), 3, 6, rng);
  }
  const auto cover = random_cover(inst.graph(), rng);
  const auto moves = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
  return perturb(vc_to_solution(inst, cover), table.k(), moves, rng);
}

}  // namespace anonhard::binary
