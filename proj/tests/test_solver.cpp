#include <doctest.h>

#include <random>

#include <anonhard/error.hpp>
#include <anonhard/sampling.hpp>
#include <anonhard/solver.hpp>

#include "oracles.hpp"

using namespace anonhard;

namespace {

Row bits(std::string_view s) {
  Row r;
  for (char c : s) r.push_back(Symbol::bit(c == '1'));
  return r;
}

std::vector<Row> random_rows(std::size_t count, std::size_t width, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Row> rows(count);
  for (auto& r : rows) {
    for (std::size_t c = 0; c < width; ++c) r.push_back(Symbol::bit(coin(rng)));
  }
  return rows;
}

}  // namespace

TEST_CASE("two identical triples") {
  Instance inst({bits("010"), bits("111"), bits("010"), bits("111"), bits("010"), bits("111")}, 3);
  const auto res = exact_kap(inst);
  CHECK(res.cost == 0);
  CHECK(res.optimal);
  CHECK(res.clustering == Clustering{{{0, 2, 4}, {1, 3, 5}}});
  CHECK(greedy_kap(inst).cost == 0);
}

TEST_CASE("six-row binary table") {
  const std::vector<Row> rows{bits("000"), bits("001"), bits("011"),
                              bits("111"), bits("110"), bits("100")};
  Instance inst(rows, 3);
  const auto res = exact_kap(inst);
  CHECK(res.cost == oracle::unrestricted_optimum(rows, 3));
  CHECK(res.cost == clustering_cost(inst, res.clustering));
  CHECK(res.clustering.clusters == oracle::first_restricted_optimum(rows, 3));
}

TEST_CASE("k equal to the row count forces one cluster") {
  Instance inst({bits("01"), bits("10"), bits("11"), bits("00")}, 4);
  const auto res = exact_kap(inst);
  CHECK(res.clustering.clusters.size() == 1);
  CHECK(res.cost == 8);
}

TEST_CASE("size limits") {
  Rng rng(1);
  Instance inst(random_rows(13, 3, rng), 2);
  CHECK_THROWS_AS(exact_kap(inst), Error);
  try {
    exact_kap(inst);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  CHECK_NOTHROW(exact_kap(inst, 13));
  Instance big(random_rows(kExactHardLimit + 1, 2, rng), 2);
  CHECK_THROWS_AS(exact_kap(big, 100), Error);
}

TEST_CASE("exact agrees with unrestricted enumeration") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const std::size_t count = k + trial % (9 - k);
    const auto rows = random_rows(count, 2 + trial % 5, rng);
    Instance inst(rows, k);
    const auto res = exact_kap(inst);
    CAPTURE(trial);
    CHECK(res.cost == oracle::unrestricted_optimum(rows, k));
    CHECK(res.cost == clustering_cost(inst, res.clustering));
    CHECK(res.clustering.clusters == oracle::first_restricted_optimum(rows, k));
    CHECK(normalize_cluster_sizes(inst, res.clustering) == res.clustering);
  }
}

TEST_CASE("greedy is feasible and never beats exact") {
  Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + trial % 3;
    const std::size_t count = k + trial % 9;
    Instance inst(random_rows(count, 5, rng), k);
    const auto greedy = greedy_kap(inst);
    CHECK(is_feasible(inst, greedy.clustering));
    CHECK_FALSE(greedy.optimal);
    CHECK(greedy.cost == clustering_cost(inst, greedy.clustering));
    CHECK(greedy.cost >= exact_kap(inst).cost);
  }
}
