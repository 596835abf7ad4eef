#include <benchmark/benchmark.h>

#include "darp/construction.hpp"
#include "darp/instance_io.hpp"
#include "darp/schedule.hpp"
#include "darp/vns.hpp"

namespace {

using namespace darp;

const PenaltyState kPenalties{100.0, 1.0, 10000.0, 1.0, 0.05};

Instance make(int n, int m) {
  Rng rng(42);
  RandomInstanceSpec spec;
  spec.n = n;
  spec.m = m;
  spec.heterogeneous = true;
  return random_instance(spec, rng);
}

void BM_EightStep(benchmark::State& state) {
  const Instance inst = make(static_cast<int>(state.range(0)), 1);
  const Solution s = heuristic1(inst);
  const Route route{0, s.nodes(0)};
  for (auto _ : state) benchmark::DoNotOptimize(eight_step_evaluate(inst, route));
}
BENCHMARK(BM_EightStep)->Arg(4)->Arg(8)->Arg(16);

void BM_BestInsertion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = make(n, 1);
  std::vector<int> nodes;
  for (int r = 0; r + 1 < n; ++r) {
    nodes.push_back(inst.pickup_node(r));
    nodes.push_back(inst.delivery_node(r));
  }
  const Route route{0, nodes};
  for (auto _ : state) benchmark::DoNotOptimize(best_insertion(inst, route, n - 1, kPenalties));
}
BENCHMARK(BM_BestInsertion)->Arg(4)->Arg(8)->Arg(16);

void BM_VnsIterations(benchmark::State& state) {
  const Instance inst = make(24, 3);
  VnsConfig cfg = named_config("algo13");
  cfg.it_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_vns(inst, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VnsIterations)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
