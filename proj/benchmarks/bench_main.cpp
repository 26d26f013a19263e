#include <benchmark/benchmark.h>

#include <vector>

#include "netslice/delaunay.hpp"
#include "netslice/generators.hpp"
#include "netslice/rng.hpp"
#include "netslice/walk.hpp"

using namespace netslice;

namespace {

void BM_Generate(benchmark::State& state) {
  const auto model = static_cast<Model>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto g = generate(GenSpec::defaults(model, n, seed++));
    benchmark::DoNotOptimize(g.graph.edge_count());
  }
  state.SetLabel(std::string(to_string(model)));
}
BENCHMARK(BM_Generate)->ArgsProduct({{0, 1, 2}, {100, 400}});

void BM_Delaunay(benchmark::State& state) {
  Rng rng(1);
  std::vector<Point2D> pts;
  for (int i = 0; i < state.range(0); ++i) pts.push_back({rng.uniform01(), rng.uniform01()});
  for (auto _ : state) benchmark::DoNotOptimize(delaunay(pts).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Delaunay)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_RunParallel(benchmark::State& state) {
  const auto model = static_cast<Model>(state.range(0));
  const Graph g = generate(GenSpec::defaults(model, 100, 7)).graph;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_parallel(g, seed++).total_steps);
  state.SetLabel(std::string(to_string(model)));
}
BENCHMARK(BM_RunParallel)->DenseRange(0, 2);

void BM_RunSequential(benchmark::State& state) {
  const Graph g = generate(GenSpec::defaults(Model::ER, 100, 7)).graph;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_sequential(g, seed++).duration);
}
BENCHMARK(BM_RunSequential);

}  // namespace

BENCHMARK_MAIN();
