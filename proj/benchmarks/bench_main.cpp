#include <benchmark/benchmark.h>

#include <numeric>

#include <anonhard/binary_reduction.hpp>
#include <anonhard/cost.hpp>
#include <anonhard/graphs.hpp>
#include <anonhard/sampling.hpp>
#include <anonhard/solver.hpp>
#include <anonhard/width8_reduction.hpp>

using namespace anonhard;

namespace {

Instance random_instance(std::size_t count, std::size_t width, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Row> rows(count);
  for (auto& r : rows) {
    for (std::size_t c = 0; c < width; ++c) r.push_back(Symbol::bit(coin(rng)));
  }
  return Instance(std::move(rows), k);
}

void BM_ClusterCost(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto inst = random_instance(size, 256, 1, 1);
  Cluster all(size);
  std::iota(all.begin(), all.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(cluster_cost(inst, all));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}
BENCHMARK(BM_ClusterCost)->Arg(3)->Arg(8)->Arg(64);

void BM_BuildBinary(benchmark::State& state) {
  const auto g = random_cubic(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(binary::build_instance(g));
}
BENCHMARK(BM_BuildBinary)->Arg(10)->Arg(40);

void BM_BuildWidth8(benchmark::State& state) {
  const auto g = random_cubic(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(width8::build_instance(g));
}
BENCHMARK(BM_BuildWidth8)->Arg(10)->Arg(40);

void BM_DistanceCatalog(benchmark::State& state) {
  const auto inst = binary::build_instance(builtin::petersen());
  for (auto _ : state)
    benchmark::DoNotOptimize(binary::verify_distance_catalog(inst, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_DistanceCatalog)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExactKap(benchmark::State& state) {
  const auto inst = random_instance(static_cast<std::size_t>(state.range(0)), 8, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_kap(inst));
}
BENCHMARK(BM_ExactKap)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CanonicalizeBinary(benchmark::State& state) {
  const auto inst = binary::build_instance(builtin::petersen());
  Rng rng(4);
  const auto s = binary::sample_solution(inst, rng);
  for (auto _ : state) benchmark::DoNotOptimize(binary::canonicalize(inst, s));
}
BENCHMARK(BM_CanonicalizeBinary);

void BM_CanonicalizeWidth8(benchmark::State& state) {
  const auto inst = width8::build_instance(builtin::petersen());
  Rng rng(4);
  const auto s = width8::sample_solution(inst, rng);
  for (auto _ : state) benchmark::DoNotOptimize(width8::canonicalize(inst, s));
}
BENCHMARK(BM_CanonicalizeWidth8);

}  // namespace
BENCHMARK_MAIN();
