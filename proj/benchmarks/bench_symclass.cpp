#include <benchmark/benchmark.h>

#include "symclass/classes.hpp"
#include "symclass/oracle.hpp"

using namespace symclass;

static void BM_ClipsFoldIrreducible(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const ClassSet irr = irreducible_classes(k);
  for (auto _ : state)
    benchmark::DoNotOptimize(clips_sets(irr, irr));
  state.SetLabel(std::to_string(irr.size()) + " classes");
}
BENCHMARK(BM_ClipsFoldIrreducible)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_ClassifyPreset(benchmark::State& state) {
  const SpaceExpr e = SpaceExpr::preset(all_presets[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_space(e));
  state.SetLabel(e.str());
}
BENCHMARK(BM_ClassifyPreset)->DenseRange(0, 5);

static void BM_ClassifyGeneric(benchmark::State& state) {
  const SpaceExpr e = SpaceExpr::generic(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_space(e));
}
BENCHMARK(BM_ClassifyGeneric)->Arg(4)->Arg(8)->Arg(12);

static void BM_OracleSample(benchmark::State& state) {
  const SubgroupClass a = SubgroupClass::octahedral(), b = SubgroupClass::icosahedral();
  for (auto _ : state)
    benchmark::DoNotOptimize(clips_sample(a, b, static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_OracleSample)->Arg(0)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_BuildIcosahedral(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_group(SubgroupClass::icosahedral()));
}
BENCHMARK(BM_BuildIcosahedral)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
