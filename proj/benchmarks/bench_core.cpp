#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "cliquecover/collection.hpp"
#include "cliquecover/counting.hpp"
#include "cliquecover/families.hpp"
#include "cliquecover/oracle.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/quotient.hpp"
#include "cliquecover/signatures.hpp"

using namespace cliquecover;

namespace {

// m overlapping cliques of the given size over a pool of `nodes` labels,
// deterministic for a fixed seed.
CliqueCollection synthetic_collection(int m, int clique_size, int nodes,
                                      std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::string>> cliques;
  std::vector<int> pool(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < clique_size; ++i) {
      const int k = i + static_cast<int>(rng() % static_cast<std::uint64_t>(nodes - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(k)]);
    }
    std::vector<std::string> labels;
    for (int i = 0; i < clique_size; ++i) {
      labels.push_back(std::to_string(pool[static_cast<std::size_t>(i)]));
    }
    cliques.push_back(std::move(labels));
  }
  return CliqueCollection::from_label_cliques(cliques);
}

void BM_BuildPartition(benchmark::State& state) {
  const auto c = synthetic_collection(static_cast<int>(state.range(0)), 40, 200);
  for (auto _ : state) {
    auto p = GammaPartition::build(c);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_BuildPartition)->Arg(4)->Arg(8)->Arg(16);

void BM_QuotientMatrix(benchmark::State& state) {
  const auto c = synthetic_collection(static_cast<int>(state.range(0)), 40, 200);
  const auto p = GammaPartition::build(c);
  for (auto _ : state) {
    auto q = quotient_matrix(p);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_QuotientMatrix)->Arg(8)->Arg(16);

// The family streams walk every intersecting (or connected) cell subset,
// so the support size, not n, is the cost driver; keep pools small.
void BM_CliqueGF(benchmark::State& state) {
  const auto c = synthetic_collection(static_cast<int>(state.range(0)), 6, 16);
  const auto p = GammaPartition::build(c);
  for (auto _ : state) {
    auto gf = clique_gf(p);
    benchmark::DoNotOptimize(gf);
  }
}
BENCHMARK(BM_CliqueGF)->Arg(4)->Arg(6)->Arg(8);

void BM_ConnectedGF(benchmark::State& state) {
  const auto c = synthetic_collection(static_cast<int>(state.range(0)), 6, 16);
  const auto p = GammaPartition::build(c);
  for (auto _ : state) {
    auto gf = connected_subgraph_gf(p);
    benchmark::DoNotOptimize(gf);
  }
}
BENCHMARK(BM_ConnectedGF)->Arg(4)->Arg(6);

void BM_PieCounts(benchmark::State& state) {
  const auto c = synthetic_collection(static_cast<int>(state.range(0)), 6, 16);
  for (auto _ : state) {
    auto count = count_r_cliques_pie(c, 4);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PieCounts)->Arg(6)->Arg(8);

void BM_MaximalCliques(benchmark::State& state) {
  const auto c = synthetic_collection(static_cast<int>(state.range(0)), 6, 16);
  const auto p = GammaPartition::build(c);
  for (auto _ : state) {
    auto cliques = enumerate_maximal_cliques(p);
    benchmark::DoNotOptimize(cliques);
  }
}
BENCHMARK(BM_MaximalCliques)->Arg(6)->Arg(10);

void BM_MaximalIntersectingFamilies(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_maximal_intersecting(m));
  }
}
BENCHMARK(BM_MaximalIntersectingFamilies)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_BruteConnectedOracle(benchmark::State& state) {
  const auto c = synthetic_collection(4, 6, static_cast<int>(state.range(0)));
  const auto g = GraphUnion::from_collection(c);
  for (auto _ : state) {
    auto counts = oracle::brute_connected_counts(g);
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(BM_BruteConnectedOracle)->Arg(12)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
