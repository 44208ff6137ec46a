#include <benchmark/benchmark.h>

#include "rankeval/datagen.hpp"
#include "rankeval/eval.hpp"
#include "rankeval/oracle.hpp"
#include "rankeval/rankdcg.hpp"

namespace {

using namespace rankeval;

RankedList skewed_list(std::size_t n) {
  GenSpec spec;
  spec.n = n;
  spec.distribution = PowerLaw{2.0, 10};
  spec.seed = 42;
  return generate(spec);
}

void BM_RankDcg(benchmark::State& state) {
  const RankedList list = skewed_list(static_cast<std::size_t>(state.range(0)));
  const Hypothesis hyp = perturb(list, AdjacentSwaps{20, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_dcg(list, hyp).normalized);
  }
}
BENCHMARK(BM_RankDcg)->Arg(10)->Arg(100)->Arg(1000);

void BM_KendallTauB(benchmark::State& state) {
  const RankedList list = skewed_list(static_cast<std::size_t>(state.range(0)));
  const Hypothesis hyp = perturb(list, AdjacentSwaps{20, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_metric("tau-b", list, hyp));
  }
}
BENCHMARK(BM_KendallTauB)->Arg(10)->Arg(100)->Arg(1000);

void BM_Ndcg(benchmark::State& state) {
  const RankedList list = skewed_list(static_cast<std::size_t>(state.range(0)));
  const Hypothesis hyp = perturb(list, AdjacentSwaps{20, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ndcg(list, hyp));
  }
}
BENCHMARK(BM_Ndcg)->Arg(100)->Arg(1000);

void BM_OracleVerify(benchmark::State& state) {
  std::vector<int> ranks;
  for (int i = 0; i < state.range(0); ++i) ranks.push_back(1 + i % 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_instance(ranks).ok());
  }
}
BENCHMARK(BM_OracleVerify)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
