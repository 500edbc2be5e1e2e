#include <benchmark/benchmark.h>

#include <random>

#include "eisenlab/corering/charpoly.hpp"
#include "eisenlab/corering/dlog.hpp"
#include "eisenlab/hecke/eisenstein.hpp"
#include "eisenlab/hecke/manin.hpp"
#include "eisenlab/invariants/invariants.hpp"

using namespace eisenlab;

static void BM_BerkowitzCharpoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Modulus m(5, 8);
  std::mt19937_64 rng(1);
  ZmodMatrix a(m, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng() % m.value();
  for (auto _ : state) benchmark::DoNotOptimize(berkowitz_charpoly(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BerkowitzCharpoly)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void BM_ManinSpace(benchmark::State& state) {
  const auto N = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ManinSpace(N, Modulus(5, 6)).dimension());
}
BENCHMARK(BM_ManinSpace)->Arg(181)->Arg(751)->Arg(3001)->Unit(benchmark::kMillisecond);

static void BM_HeckeMatrix(benchmark::State& state) {
  const auto N = static_cast<u64>(state.range(0));
  ManinSpace space(N, Modulus(5, 6));
  for (auto _ : state) benchmark::DoNotOptimize(hecke_matrix(space, 2));
}
BENCHMARK(BM_HeckeMatrix)->Arg(181)->Arg(751)->Arg(3001)->Unit(benchmark::kMillisecond);

static void BM_EisensteinLocalFactor(benchmark::State& state) {
  const auto N = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    HeckeContext ctx(N, 5, working_precision(N, 5));
    benchmark::DoNotOptimize(eisenstein_local_factor(ctx, {}));
  }
}
BENCHMARK(BM_EisensteinLocalFactor)->Arg(181)->Arg(751)->Unit(benchmark::kMillisecond);

static void BM_MerelNumber(benchmark::State& state) {
  const auto N = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(merel_number(N));
}
BENCHMARK(BM_MerelNumber)->Arg(337)->Arg(9001);
BENCHMARK_MAIN();
