#include <benchmark/benchmark.h>

#include <random>

#include "hopf/cohomology.hpp"
#include "hopf/constructors.hpp"
#include "hopf/gf_linalg.hpp"
#include "hopf/groups.hpp"
#include "hopf/invariants.hpp"
#include "hopf/masuoka.hpp"

using namespace hopf;

static FpMatrix random_matrix(std::uint32_t p, std::size_t n) {
  std::mt19937 rng(1);
  FpMatrix m(p, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<Residue>(rng() % p);
  return m;
}

static void BM_RrefF2(benchmark::State& state) {
  const FpMatrix m = random_matrix(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RrefF2)->Arg(64)->Arg(256)->Arg(729);

static void BM_RrefF3(benchmark::State& state) {
  const FpMatrix m = random_matrix(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RrefF3)->Arg(64)->Arg(256)->Arg(729);

static void BM_JacobsonRadicalGroupAlgebra(benchmark::State& state) {
  const StructuredAlgebra a = group_algebra(2, cyclic_group(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(jacobson_radical(a));
}
BENCHMARK(BM_JacobsonRadicalGroupAlgebra)->Arg(8)->Arg(16)->Arg(32);

static void BM_H2GroupDual(benchmark::State& state) {
  const StructuredAlgebra h = group_dual(2, cyclic_group(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(h2(h).dim());
}
BENCHMARK(BM_H2GroupDual)->Arg(4)->Arg(8)->Arg(16);

static void BM_H2Heisenberg(benchmark::State& state) {
  const StructuredAlgebra h = group_dual(3, group_by_name("heis3"));
  for (auto _ : state) benchmark::DoNotOptimize(h2(h).dim());
}
BENCHMARK(BM_H2Heisenberg)->Unit(benchmark::kMillisecond);

static void BM_MasuokaReport(benchmark::State& state) {
  const StructuredAlgebra h = group_dual(2, group_by_name("q8xc2"));
  for (auto _ : state) benchmark::DoNotOptimize(masuoka_report(h).agreement);
}
BENCHMARK(BM_MasuokaReport)->Unit(benchmark::kMillisecond);

static void BM_ExtensionChain(benchmark::State& state) {
  const StructuredAlgebra h = group_dual(2, cyclic_group(16));
  for (auto _ : state) benchmark::DoNotOptimize(build_extension_chain(h).steps.size());
}
BENCHMARK(BM_ExtensionChain)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
