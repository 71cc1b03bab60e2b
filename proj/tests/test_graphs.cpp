#include <doctest.h>

#include <sstream>

#include <anonhard/error.hpp>
#include <anonhard/graphs.hpp>

#include "oracles.hpp"

using namespace anonhard;

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

bool triangle_free(const CubicGraph& g) {
  for (const auto& e : g.edges()) {
    for (auto w : g.neighbors(e.u)) {
      if (w != e.v && g.edge_index(w, e.v)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("built-in graphs") {
  CHECK(builtin::k4().vertex_count() == 4);
  CHECK(builtin::k4().edge_count() == 6);
  CHECK(builtin::k33().edge_count() == 9);
  CHECK(builtin::petersen().edge_count() == 15);
  CHECK(builtin::q3().edge_count() == 12);
  CHECK(triangle_free(builtin::k33()));
  CHECK(triangle_free(builtin::petersen()));
  CHECK_FALSE(triangle_free(builtin::k4()));
  CHECK(kind_of([] { builtin_graph("k5"); }) == ErrorKind::Parse);
  for (auto name : builtin_names()) CHECK_NOTHROW(builtin_graph(name));
}

TEST_CASE("validation errors") {
  CHECK(kind_of([] { validate_cubic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }) == ErrorKind::NotCubic);
  CHECK(kind_of([] { validate_cubic(4, {{0, 0}, {0, 1}}); }) == ErrorKind::NotSimple);
  CHECK(kind_of([] {
          validate_cubic(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 3}});
        }) == ErrorKind::NotSimple);
  CHECK(kind_of([] { validate_cubic(4, {{0, 9}}); }) == ErrorKind::NotSimple);
}

TEST_CASE("incident edges follow neighbor order") {
  const auto g = builtin::petersen();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident_edges(v);
    for (int s = 0; s < 3; ++s) {
      const auto& e = g.edges()[inc[s]];
      CHECK((e.u == v ? e.v : e.u) == g.neighbors(v)[s]);
    }
  }
}

TEST_CASE("minimum covers of the built-ins") {
  CHECK(exact_vertex_cover(builtin::k4()).size() == oracle::min_cover_size(builtin::k4()));
  CHECK(exact_vertex_cover(builtin::k4()).size() == 3);
  CHECK(exact_vertex_cover(builtin::k33()).size() == 3);
  CHECK(exact_vertex_cover(builtin::petersen()).size() == 6);
  CHECK(exact_vertex_cover(builtin::q3()).size() == 4);
}

TEST_CASE("exact cover matches subset scan on random cubic graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 4 + 2 * (seed % 8);
    const auto g = random_cubic(n, seed);
    const auto cover = exact_vertex_cover(g);
    CAPTURE(seed);
    CHECK(is_vertex_cover(g, cover));
    CHECK(cover.size() == oracle::min_cover_size(g));
    const auto greedy = greedy_vertex_cover(g);
    CHECK(is_vertex_cover(g, greedy));
    CHECK(greedy.size() <= 2 * cover.size());
  }
}

TEST_CASE("random cubic graphs are deterministic per seed") {
  CHECK(random_cubic(20, 5).edges() == random_cubic(20, 5).edges());
  CHECK(kind_of([] { random_cubic(7, 0); }) != ErrorKind::Parse);
}

TEST_CASE("dimacs round trip") {
  const auto g = builtin::petersen();
  std::stringstream ss;
  write_dimacs(ss, g);
  const auto h = read_dimacs(ss);
  CHECK(h.edges() == g.edges());
  std::istringstream bad("p 4 6\ne 1 2\n");
  CHECK_THROWS_AS(read_dimacs(bad), Error);
  std::istringstream with_comments("c hello\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
  CHECK(read_dimacs(with_comments).edge_count() == 6);
}

TEST_CASE("cover helpers") {
  const auto g = builtin::k4();
  CHECK(make_cover({2, 0, 2, 1}, 4).vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(kind_of([] { make_cover({4}, 4); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { require_cover(g, make_cover({0, 1}, 4)); }) == ErrorKind::NotACover);
}
