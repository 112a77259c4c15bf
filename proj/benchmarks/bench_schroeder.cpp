#include <benchmark/benchmark.h>

#include "schroeder/element_store.hpp"
#include "schroeder/factorize.hpp"
#include "schroeder/green.hpp"
#include "schroeder/rank.hpp"

using namespace schroeder;

namespace {

void BM_EnumerateLS(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ElementStore::enumerate(MonoidSpec::ls(n)));
  }
}
BENCHMARK(BM_EnumerateLS)->DenseRange(3, 7);

void BM_StarredClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ElementStore store = ElementStore::enumerate(MonoidSpec::ls(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(starred_classes(store, Relation::LStar));
  }
}
BENCHMARK(BM_StarredClasses)->DenseRange(3, 6);

void BM_GreenLClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ElementStore store = ElementStore::enumerate(MonoidSpec::ls(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(green_classes(store, Relation::L));
  }
}
BENCHMARK(BM_GreenLClasses)->DenseRange(3, 5);

void BM_ClosureOfTopIdempotents(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ElementStore store = ElementStore::enumerate(MonoidSpec::k(n, n - 1));
  std::vector<ElementIndex> gens;
  for (const PartialMap& e : idempotents_of_height(n, n - 1, Family::LS)) {
    gens.push_back(store.index_of(e));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        closure_indices(store, std::span<const ElementIndex>(gens)));
  }
}
BENCHMARK(BM_ClosureOfTopIdempotents)->DenseRange(3, 6);

void BM_FactorizeAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ElementStore store = ElementStore::enumerate(MonoidSpec::ls(n));
  for (auto _ : state) {
    for (std::size_t i = 0; i < store.map_count(); ++i) {
      benchmark::DoNotOptimize(
          idempotent_factorization(store.map_at(static_cast<ElementIndex>(i))));
    }
  }
}
BENCHMARK(BM_FactorizeAll)->DenseRange(3, 5);

void BM_VerifyRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_rank(MonoidSpec::ls(n)));
  }
}
BENCHMARK(BM_VerifyRank)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();
