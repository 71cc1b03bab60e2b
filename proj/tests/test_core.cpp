#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <anonhard/cost.hpp>
#include <anonhard/error.hpp>
#include <anonhard/sampling.hpp>
#include <anonhard/table.hpp>

#include "oracles.hpp"

using namespace anonhard;

namespace {

Row bits(std::string_view s) {
  Row r;
  for (char c : s) r.push_back(Symbol::bit(c == '1'));
  return r;
}

std::vector<Row> random_rows(std::size_t count, std::size_t width, unsigned alphabet, Rng& rng) {
  std::uniform_int_distribution<unsigned> pick(0, alphabet - 1);
  std::vector<Row> rows(count);
  for (auto& r : rows) {
    for (std::size_t c = 0; c < width; ++c) {
      const unsigned x = pick(rng);
      r.push_back(alphabet == 2 ? Symbol::bit(x == 1) : Symbol::vertex(x + 1));
    }
  }
  return rows;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an anonhard::Error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("symbol tokens round trip") {
  for (auto s : {Symbol::bit(false), Symbol::bit(true), Symbol::vertex(7), Symbol::vertex_row(3, 5),
                 Symbol::edge(2, 9), Symbol::free_row(4)}) {
    CHECK(Symbol::parse(s.token()) == s);
  }
  CHECK(Symbol::vertex_row(3, 5).token() == "ar:3:5");
  CHECK(Symbol::edge(2, 9).token() == "t:2:9");
  CHECK(Symbol::vertex(2) != Symbol::free_row(2));
  for (auto bad : {"", "2", "a:", "a:x", "ar:1", "t:1:2:3", "q:1", "a:-1"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { Symbol::parse(bad); }) == ErrorKind::Parse);
  }
}

TEST_CASE("instance validation") {
  CHECK(kind_of([] { Instance({bits("01"), bits("0")}, 1); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([] { Instance({Row{}, Row{}}, 1); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([] { Instance({bits("01")}, 2); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { Instance({bits("01")}, 0); }) == ErrorKind::Infeasible);
  Instance inst({bits("01"), bits("11")}, 2);
  CHECK(inst.width() == 2);
}

TEST_CASE("partition validation") {
  CHECK(kind_of([] { validate_partition({{{0, 1}, {1, 2}}}, 3); }) == ErrorKind::InvalidPartition);
  CHECK(kind_of([] { validate_partition({{{0, 1}}}, 3); }) == ErrorKind::InvalidPartition);
  CHECK(kind_of([] { validate_partition({{{0, 1, 2}, {}}}, 3); }) == ErrorKind::InvalidPartition);
  CHECK(kind_of([] { validate_partition({{{0, 1, 3}}}, 3); }) == ErrorKind::InvalidPartition);
  CHECK_NOTHROW(validate_partition({{{2, 0}, {1}}}, 3));
  CHECK(normalized({{{2, 1}, {0}}}) == Clustering{{{0}, {1, 2}}});
}

TEST_CASE("small worked cost") {
  Instance inst({bits("000"), bits("001"), bits("011")}, 3);
  const Cluster all{0, 1, 2};
  CHECK(cluster_cost(inst, all) == 6);
  CHECK(cluster_lower_bound(inst, all) == 6);
  CHECK(suppressed_columns(inst, all) == std::vector<std::size_t>{1, 2});
  CHECK(kind_of([&] { cluster_cost(inst, Cluster{}); }) == ErrorKind::EmptyCluster);
  CHECK(kind_of([&] { hamming(inst.row(0), std::vector<Symbol>{Symbol::bit(true)}); }) ==
        ErrorKind::LengthMismatch);
}

TEST_CASE("hamming is a metric") {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rows = random_rows(3, 1 + trial % 12, trial % 2 ? 2 : 4, rng);
    const auto ab = hamming(rows[0], rows[1]);
    CHECK(ab == oracle::hamming(rows[0], rows[1]));
    CHECK(hamming(rows[0], rows[0]) == 0);
    CHECK(ab == hamming(rows[1], rows[0]));
    CHECK((ab == 0) == (rows[0] == rows[1]));
    CHECK(hamming(rows[0], rows[2]) <= ab + hamming(rows[1], rows[2]));
  }
}

TEST_CASE("cluster cost against the naive column scan") {
  Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t count = 3 + trial % 7;
    const auto rows = random_rows(count, 1 + trial % 10, trial % 3 ? 2 : 3, rng);
    Instance inst(rows, 1);
    Cluster c(count);
    std::iota(c.begin(), c.end(), std::size_t{0});
    std::shuffle(c.begin(), c.end(), rng);
    c.resize(1 + trial % count);
    CHECK(cluster_cost(inst, c) == oracle::cluster_cost(rows, c));
    CHECK(cluster_lower_bound(inst, c) <= cluster_cost(inst, c));
  }
}

TEST_CASE("normalizing cluster sizes never raises cost") {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 2 + trial % 3;
    const std::size_t count = k + trial % 20;
    Instance inst(random_rows(count, 6, 2, rng), k);
    auto p = random_partition(count, k, k, 4 * k, rng);
    REQUIRE(is_feasible(inst, p));
    const auto q = normalize_cluster_sizes(inst, p);
    CHECK(clustering_cost(inst, q) <= clustering_cost(inst, p));
    for (const auto& c : q.clusters) {
      CHECK(c.size() >= k);
      CHECK(c.size() <= 2 * k - 1);
    }
    CHECK_NOTHROW(validate_partition(q, count));
  }
}

TEST_CASE("normalization rejects infeasible input") {
  Instance inst({bits("0"), bits("1"), bits("1")}, 2);
  CHECK(kind_of([&] { normalize_cluster_sizes(inst, {{{0}, {1, 2}}}); }) == ErrorKind::Infeasible);
  CHECK_FALSE(is_feasible(inst, {{{0}, {1, 2}}}));
}

TEST_CASE("random partitions and perturbations stay feasible") {
  Rng rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 2 + trial % 4;
    const std::size_t count = k + trial % 40;
    auto p = random_partition(count, k, k, 2 * k + 1, rng);
    CHECK_NOTHROW(validate_partition(p, count));
    p = perturb(std::move(p), k, 10, rng);
    CHECK_NOTHROW(validate_partition(p, count));
    for (const auto& c : p.clusters) CHECK(c.size() >= k);
  }
}

TEST_CASE("clustering cost ignores ordering") {
  Rng rng(15);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t count = 6 + trial % 10;
    Instance inst(random_rows(count, 5, 2, rng), 3);
    auto p = random_partition(count, 3, 3, 5, rng);
    const Cost before = clustering_cost(inst, p);
    std::shuffle(p.clusters.begin(), p.clusters.end(), rng);
    for (auto& c : p.clusters) std::shuffle(c.begin(), c.end(), rng);
    CHECK(clustering_cost(inst, p) == before);
  }
}

TEST_CASE("splitting a cluster never adds suppressed columns") {
  Rng rng(16);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t count = 2 + trial % 9;
    Instance inst(random_rows(count, 8, 3, rng), 1);
    Cluster whole(count), left, right;
    std::iota(whole.begin(), whole.end(), std::size_t{0});
    std::bernoulli_distribution coin(0.5);
    for (auto r : whole) (coin(rng) ? left : right).push_back(r);
    if (left.empty() || right.empty()) continue;
    CHECK(suppressed_count(inst, left) <= suppressed_count(inst, whole));
    CHECK(suppressed_count(inst, right) <= suppressed_count(inst, whole));
  }
}

TEST_CASE("normalization examples") {
  const std::vector<Row> six(6, bits("0101"));
  Instance same(six, 3);
  const auto split = normalize_cluster_sizes(same, {{{0, 1, 2, 3, 4, 5}}});
  CHECK(split == Clustering{{{0, 1, 2}, {3, 4, 5}}});
  CHECK(clustering_cost(same, split) == 0);
  Instance seven({bits("000"), bits("001"), bits("011"), bits("111"), bits("110"), bits("100"),
                  bits("010")},
                 3);
  const Clustering one{{{0, 1, 2, 3, 4, 5, 6}}};
  const auto q = normalize_cluster_sizes(seven, one);
  CHECK(q.clusters.size() == 2);
  CHECK(clustering_cost(seven, q) <= clustering_cost(seven, one));
  const Clustering fine{{{0, 1, 2}, {3, 4, 5, 6}}};
  CHECK(normalize_cluster_sizes(seven, fine) == fine);
  CHECK(is_feasible(seven, fine));
  CHECK_FALSE(is_feasible(seven, Clustering{{{0, 1}, {2, 3, 4, 5, 6}}}));
}
