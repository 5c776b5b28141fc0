#include <benchmark/benchmark.h>

#include "finvar/catalog.hpp"
#include "finvar/invariants.hpp"
#include "finvar/segre.hpp"

using namespace finvar;

static void BM_ClosureBinaryIcosahedral(benchmark::State& state) {
  const auto gens = binary_polyhedral(Polyhedral::Icosahedral).generators;
  for (auto _ : state) benchmark::DoNotOptimize(MatGroup::closure(gens).order());
}
BENCHMARK(BM_ClosureBinaryIcosahedral)->Unit(benchmark::kMillisecond);

static void BM_ClosurePsiII(benchmark::State& state) {
  ClosureOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  const auto gens = build_catalog_entry("psi_ii").generators;
  for (auto _ : state) benchmark::DoNotOptimize(MatGroup::closure(gens, opts).order());
}
BENCHMARK(BM_ClosurePsiII)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_MolienGroupN(benchmark::State& state) {
  const MatGroup n = group_n_and_friends().n.group;
  for (auto _ : state) benchmark::DoNotOptimize(molien(n, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MolienGroupN)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_InvariantBasisGroupN(benchmark::State& state) {
  const MatGroup n = group_n_and_friends().n.group;
  for (auto _ : state) benchmark::DoNotOptimize(invariant_basis(n, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_InvariantBasisGroupN)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SegreIncidence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(incidence(enumerate_geometry()).pairs.size());
}
BENCHMARK(BM_SegreIncidence)->Unit(benchmark::kMillisecond);

static void BM_OuterAutomorphism(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(outer_automorphism().image.size());
}
BENCHMARK(BM_OuterAutomorphism)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
