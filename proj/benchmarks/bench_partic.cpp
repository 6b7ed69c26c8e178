#include <benchmark/benchmark.h>

#include "partic/center.hpp"
#include "partic/normal_form.hpp"
#include "partic/oracle.hpp"
#include "partic/particle.hpp"

namespace {

using namespace partic;

void BM_Normalize(benchmark::State& state) {
  const Rank rank(6);
  std::vector<int> letters;
  for (int i = 0; i < state.range(0); ++i) {
    letters.push_back(1 + (i * 7) % rank.generators());
  }
  const Word w(rank, letters);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(w));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(4)->Range(8, 512);

void BM_CountClasses(benchmark::State& state) {
  const Rank rank(4);
  const int r = static_cast<int>(state.range(0));
  const MultiDegree degree(rank, {r, r, r});
  const RelationSet rs(RelationKind::partic, rank);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_classes(degree, rs));
  }
}
BENCHMARK(BM_CountClasses)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_CenterBasis(benchmark::State& state) {
  const Rank rank(4);
  const int r = static_cast<int>(state.range(0));
  const MultiDegree degree(rank, {r, r, r});
  for (auto _ : state) {
    benchmark::DoNotOptimize(center_basis_in_degree(degree));
  }
}
BENCHMARK(BM_CenterBasis)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Faithfulness(benchmark::State& state) {
  const Rank rank(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(faithfulness_check(rank, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Faithfulness)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
