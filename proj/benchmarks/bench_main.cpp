#include <benchmark/benchmark.h>

#include "feaslab/checker.hpp"
#include "feaslab/cut_elim.hpp"
#include "feaslab/flow_graph.hpp"
#include "feaslab/generators.hpp"
#include "feaslab/oracle.hpp"

namespace {

using namespace feaslab;

void BM_Generate(benchmark::State& state, const char* name) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(name, n));
}

void BM_Check(benchmark::State& state, const char* name) {
  const GenReport r = generate(name, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check(r.proof, r.theory));
  state.counters["lines"] = static_cast<double>(r.stats.lines);
}

void BM_EliminateCuts(benchmark::State& state) {
  const GenReport r = gen_square_cut(static_cast<std::size_t>(state.range(0)));
  std::uint64_t lines = 0;
  for (auto _ : state) {
    const Proof cf = eliminate_cuts(r.proof, r.theory);
    lines = size(cf).lines;
  }
  state.counters["cut_free_lines"] = static_cast<double>(lines);
}

void BM_FlowGraph(benchmark::State& state) {
  const GenReport r = gen_square_cut(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flow_stats(build_flow_graph(r.proof, r.theory)));
}

void BM_MinTreeDerivation(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_tree_derivation(n).cost(n));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Generate, square_cut, "square-cut")->DenseRange(5, 30, 5);
BENCHMARK_CAPTURE(BM_Generate, distorted, "distorted")->DenseRange(5, 30, 5);
BENCHMARK_CAPTURE(BM_Check, square_cut, "square-cut")->DenseRange(4, 20, 4);
BENCHMARK_CAPTURE(BM_Check, matrix_power, "matrix-power")->DenseRange(4, 16, 4);
BENCHMARK_CAPTURE(BM_Check, rational_orbit, "rational-orbit")->DenseRange(4, 16, 4);
BENCHMARK(BM_EliminateCuts)->DenseRange(1, 10);
BENCHMARK(BM_FlowGraph)->DenseRange(2, 10, 2);
BENCHMARK(BM_MinTreeDerivation)->RangeMultiplier(10)->Range(100, 100000);
BENCHMARK_MAIN();
