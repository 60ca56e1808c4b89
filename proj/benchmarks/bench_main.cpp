#include <benchmark/benchmark.h>

#include <random>
#include <span>

#include "hadamard/annealing.hpp"
#include "hadamard/ortho_graph.hpp"
#include "hadamard/search.hpp"
#include "hadamard/vectorspace.hpp"

namespace {

using namespace hadamard;

void BM_InnerProduct(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  ShVector a = random_sh_vector(k, rng);
  ShVector b = random_sh_vector(k, rng);
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(a, b));
}
BENCHMARK(BM_InnerProduct)->Arg(1)->Arg(8)->Arg(32);

void BM_RandomShVector(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(random_sh_vector(k, rng));
}
BENCHMARK(BM_RandomShVector)->Arg(3)->Arg(16);

void BM_OrthogonalSet(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  ShVector v = random_sh_vector(k, rng);
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_set(v));
}
BENCHMARK(BM_OrthogonalSet)->Arg(1)->Arg(2)->Arg(3);

void BM_GraphBuild(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(OrthoGraph::build(k));
}
BENCHMARK(BM_GraphBuild)->Arg(1)->Arg(2);

void BM_OsaStep(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  AnnealerState s = make_annealer_state(k, rng);
  OsaOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(osa_step(s, opt, rng));
}
BENCHMARK(BM_OsaStep)->Arg(3)->Arg(8);

void BM_RvsConstruct(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    SearchBudget b{10'000'000, 20, seed++};
    benchmark::DoNotOptimize(rvs_construct(k, b));
  }
}
BENCHMARK(BM_RvsConstruct)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
