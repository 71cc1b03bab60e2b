#include <doctest.h>

#include <algorithm>
#include <set>

#include <anonhard/error.hpp>
#include <anonhard/sampling.hpp>
#include <anonhard/width8_reduction.hpp>

#include "oracles.hpp"

using namespace anonhard;
using namespace anonhard::width8;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an anonhard::Error");
  return ErrorKind::Parse;
}

// Row r(u,v) belongs to the neighborhoods of u and v; vertex rows to their own.
bool same_neighborhood(const Width8Instance& inst, std::size_t a, std::size_t b) {
  for (std::size_t v = 0; v < inst.graph().vertex_count(); ++v) {
    if (inst.in_neighborhood(a, v) && inst.in_neighborhood(b, v)) return true;
  }
  return false;
}

std::size_t cluster_holding(const Clustering& p, std::size_t row) {
  for (std::size_t c = 0; c < p.clusters.size(); ++c) {
    if (std::find(p.clusters[c].begin(), p.clusters[c].end(), row) != p.clusters[c].end()) return c;
  }
  return p.clusters.size();
}

}  // namespace

TEST_CASE("block assignment is proper") {
  for (auto name : builtin_names()) {
    const auto g = builtin_graph(name);
    const auto b = assign_blocks(g);
    CHECK(is_proper(g, b));
    for (int x : b.block) {
      CHECK(x >= 1);
      CHECK(x <= 4);
    }
  }
  const auto k4 = assign_blocks(builtin::k4());
  CHECK(std::set<int>(k4.block.begin(), k4.block.end()).size() == 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_cubic(30, seed);
    CHECK(is_proper(g, assign_blocks(g)));
  }
}

TEST_CASE("instance shape and symbols") {
  const auto g = builtin::k4();
  const auto inst = build_instance(g);
  const auto& t = inst.instance();
  CHECK(t.size() == 30);
  CHECK(t.width() == 8);
  CHECK(t.k() == 4);
  for (std::size_t v = 0; v < 4; ++v) {
    const int b = inst.blocks().block[v];
    for (int h = 1; h <= 5; ++h) {
      const auto& row = t.row(inst.vertex_row(v, h));
      for (std::size_t c = 0; c < 8; ++c) {
        const bool in_block = c / 2 + 1 == static_cast<std::size_t>(b);
        const bool odd = c % 2 == 0;  // 1-based odd column
        const auto want = in_block || odd ? Symbol::vertex(v + 1) : Symbol::vertex_row(v + 1, h);
        CHECK(row[c] == want);
      }
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges()[e];
    const auto& row = t.row(inst.edge_row(e));
    for (std::size_t c = 0; c < 8; ++c) {
      const auto block = static_cast<int>(c / 2 + 1);
      if (block == inst.blocks().block[u]) CHECK(row[c] == Symbol::vertex(u + 1));
      else if (block == inst.blocks().block[v]) CHECK(row[c] == Symbol::vertex(v + 1));
      else CHECK(row[c] == Symbol::edge(u + 1, v + 1));
    }
  }
  for (int f = 1; f <= 4; ++f) {
    for (const auto& s : t.row(inst.free_row(f))) CHECK(s == Symbol::free_row(f));
  }
}

TEST_CASE("pairwise distances") {
  for (auto name : {"k4", "k33", "petersen"}) {
    const auto inst = build_instance(builtin_graph(name));
    const auto& t = inst.instance();
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        const auto d = oracle::hamming(t.row(a), t.row(b));
        const auto* va = std::get_if<VertexRow>(&inst.provenance(a));
        const auto* vb = std::get_if<VertexRow>(&inst.provenance(b));
        if (va && vb) CHECK(d == (va->vertex == vb->vertex ? 3 : 8));
        if (d < 8) CHECK(same_neighborhood(inst, a, b));
        if (std::holds_alternative<FreeRow>(inst.provenance(a))) CHECK(d == 8);
      }
    }
  }
}

TEST_CASE("red and black costs") {
  const auto inst = build_instance(builtin::k4());
  const auto& t = inst.instance();
  for (std::size_t v = 0; v < 4; ++v) {
    const auto red = build_red(inst, v);
    REQUIRE(red.size() == 1);
    CHECK(cluster_cost(t, red[0]) == 15);
    CHECK(suppressed_count(t, red[0]) == 3);
    const auto black = build_black(inst, v);
    REQUIRE(black.size() == 2);
    CHECK(cluster_cost(t, black[0]) == 12);
    CHECK(cluster_cost(t, black[1]) == 24);
  }
}

TEST_CASE("cover round trips and the cost formula") {
  const std::array<std::pair<const char*, Cost>, 2> frozen{{{"k4", 137}, {"k33", 185}}};
  for (const auto& [name, cost] : frozen) {
    const auto g = builtin_graph(name);
    const auto cover = exact_vertex_cover(g);
    CHECK(expected_cost(g.vertex_count(), g.edge_count(), cover.size()) == cost);
  }
  for (auto name : builtin_names()) {
    const auto g = builtin_graph(name);
    const auto inst = build_instance(g);
    const auto cover = exact_vertex_cover(g);
    const auto p = vc_to_solution(inst, cover);
    CAPTURE(name);
    CHECK(is_feasible(inst.instance(), p));
    CHECK(is_canonical(inst, p));
    const Cost cost = clustering_cost(inst.instance(), p);
    CHECK(cost == expected_cost(g.vertex_count(), g.edge_count(), cover.size()));
    CHECK(solution_to_vc(inst, p) == cover);
    const auto recovered = (cost - 12 * static_cast<Cost>(g.vertex_count()) -
                            8 * static_cast<Cost>(g.edge_count()) - 32) / 3;
    CHECK(recovered == static_cast<Cost>(cover.size()));
    CHECK(cluster_cost(inst.instance(), p.clusters[0]) ==
          8 * static_cast<Cost>(p.clusters[0].size()));
    for (int f = 1; f <= 4; ++f) CHECK(cluster_holding(p, inst.free_row(f)) == 0);
    CHECK(verify_locality(inst, p).passed());
  }
  const auto k4 = build_instance(builtin::k4());
  const auto p = vc_to_solution(k4, make_cover({0, 1, 2}, 4));
  CHECK(clustering_cost(k4.instance(), p) == 137);
  CHECK(solution_to_vc(k4, p).vertices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("non-minimum covers obey the formula") {
  const auto g = builtin::petersen();
  const auto inst = build_instance(g);
  for (unsigned mask = 0; mask < 1024; ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < 10; ++v) {
      if (mask >> v & 1) vs.push_back(v);
    }
    const auto cover = make_cover(vs, 10);
    if (!is_vertex_cover(g, cover)) continue;
    const auto p = vc_to_solution(inst, cover);
    CHECK(clustering_cost(inst.instance(), p) == expected_cost(10, 15, cover.size()));
    const auto s = recognize(inst, p);
    for (const auto& e : g.edges()) {
      CHECK_FALSE((s.color[e.u] == VertexColor::Black && s.color[e.v] == VertexColor::Black));
    }
  }
}

TEST_CASE("expansion and recognition errors") {
  const auto inst = build_instance(builtin::k4());
  CanonicalSolution s{{VertexColor::Black, VertexColor::Black, VertexColor::Red, VertexColor::Red}};
  CHECK(kind_of([&] { expand(inst, s); }) == ErrorKind::EdgeRowConflict);
  CHECK(kind_of([&] { vc_to_solution(inst, make_cover({0, 1}, 4)); }) == ErrorKind::NotACover);
  Cluster all(inst.instance().size());
  for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
  const Clustering lump{{all}};
  CHECK_FALSE(is_canonical(inst, lump));
  CHECK(kind_of([&] { solution_to_vc(inst, lump); }) == ErrorKind::NotCanonical);
}

TEST_CASE("split shape becomes black") {
  const auto inst = build_instance(builtin::k4());
  const auto& t = inst.instance();
  auto p = vc_to_solution(inst, make_cover({0, 1, 2}, 4));
  const Cost base = clustering_cost(t, p);
  const auto r = inst.vertex_rows(3);
  const auto e = inst.incident_edge_rows(3);
  for (int split = 0; split < 2; ++split) {
    Clustering q;
    for (const auto& c : p.clusters) {
      const bool black_part = std::any_of(c.begin(), c.end(), [&](std::size_t x) {
        return std::find(r.begin(), r.end(), x) != r.end();
      });
      if (!black_part) q.clusters.push_back(c);
    }
    if (split == 0) {
      q.clusters.push_back({r[0], r[1], r[2], e[0]});
      q.clusters.push_back({r[3], r[4], e[1], e[2]});
    } else {
      q.clusters.push_back({r[0], r[1], e[0], e[1]});
      q.clusters.push_back({r[2], r[3], r[4], e[2]});
    }
    CHECK(clustering_cost(t, q) == base + 12);
    const auto out = canonicalize(inst, q);
    CHECK(is_canonical(inst, out));
    CHECK(clustering_cost(t, out) == base);
  }
}

TEST_CASE("red set with stray edge rows") {
  const auto inst = build_instance(builtin::k4());
  const auto& t = inst.instance();
  const auto p = vc_to_solution(inst, make_cover({0, 1, 2}, 4));
  const Cost base = clustering_cost(t, p);
  // Edges 0-1 and 0-2 sit in the filler; move x of them next to R_0.
  const std::array<std::size_t, 2> stray{inst.edge_row(*inst.graph().edge_index(0, 1)),
                                         inst.edge_row(*inst.graph().edge_index(0, 2))};
  for (std::size_t x = 1; x <= 2; ++x) {
    Clustering q = p;
    auto& filler = q.clusters[0];
    auto& red = q.clusters[cluster_holding(q, inst.vertex_row(0, 1))];
    for (std::size_t i = 0; i < x; ++i) {
      filler.erase(std::find(filler.begin(), filler.end(), stray[i]));
      red.push_back(stray[i]);
    }
    const Cost before = clustering_cost(t, q);
    const auto xs = static_cast<Cost>(x);
    CHECK(before - base == 6 * (5 + xs) - (15 + 8 * xs));
    const auto out = canonicalize(inst, q);
    CHECK(is_canonical(inst, out));
    CHECK(clustering_cost(t, out) == base);
  }
}

TEST_CASE("locality report") {
  const auto inst = build_instance(builtin::k4());
  const auto& t = inst.instance();
  const auto p = vc_to_solution(inst, make_cover({0, 1, 2}, 4));
  const auto report = verify_locality(inst, p);
  CHECK(report.passed());
  CHECK(report.vertex_rows == 20);
  // Mixed R_1/R_2 cluster: every row pays 8, nothing local to check.
  Clustering mixed;
  mixed.clusters.push_back({inst.vertex_row(0, 1), inst.vertex_row(0, 2), inst.vertex_row(1, 1),
                            inst.vertex_row(1, 2)});
  Cluster rest;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (std::find(mixed.clusters[0].begin(), mixed.clusters[0].end(), r) == mixed.clusters[0].end()) {
      rest.push_back(r);
    }
  }
  mixed.clusters.push_back(rest);
  CHECK(suppressed_count(t, mixed.clusters[0]) == 8);
  const auto m = verify_locality(inst, mixed);
  CHECK(m.locality_violations == 0);
  CHECK(m.passed());
  Cluster tail;
  for (std::size_t r = 3; r < t.size(); ++r) tail.push_back(r);
  CHECK(kind_of([&] { verify_locality(inst, Clustering{{{0, 1, 2}, tail}}); }) == ErrorKind::Infeasible);
}

TEST_CASE("canonicalizer on random feasible solutions") {
  for (auto name : builtin_names()) {
    const auto inst = build_instance(builtin_graph(name));
    const auto& t = inst.instance();
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = normalize_cluster_sizes(t, random_partition(t.size(), 4, 4, 7, rng));
      CAPTURE(trial);
      CHECK(verify_locality(inst, p).passed());
      const auto out = canonicalize(inst, p);
      CHECK(is_canonical(inst, out));
      CHECK(clustering_cost(t, out) <= clustering_cost(t, p));
    }
  }
}

TEST_CASE("canonicalizer fixed point") {
  const auto inst = build_instance(builtin::petersen());
  const auto p = vc_to_solution(inst, exact_vertex_cover(inst.graph()));
  const auto q = canonicalize(inst, p);
  CHECK(normalized(q) == normalized(p));
}

TEST_CASE("canonicalizer on sampled solutions") {
  for (auto name : builtin_names()) {
    const auto inst = build_instance(builtin_graph(name));
    const auto& t = inst.instance();
    Rng rng(61);
    for (int trial = 0; trial < 300; ++trial) {
      const auto p = sample_solution(inst, rng);
      REQUIRE(is_feasible(t, p));
      const auto out = canonicalize(inst, p);
      CAPTURE(name);
      CAPTURE(trial);
      CHECK(is_canonical(inst, out));
      CHECK(clustering_cost(t, out) <= clustering_cost(t, p));
    }
  }
}
