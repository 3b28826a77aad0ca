#include <benchmark/benchmark.h>

#include "tileworks/corpus.hpp"
#include "tileworks/encoder.hpp"
#include "tileworks/local_consistency.hpp"
#include "tileworks/lookup.hpp"
#include "tileworks/macro.hpp"
#include "tileworks/verifier.hpp"

namespace {

void BM_ExploreCounter(benchmark::State& state) {
  tw::Tas tas = tw::corpus::counter(4);
  for (auto _ : state) benchmark::DoNotOptimize(tw::explore(tas, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExploreCounter)->Arg(10)->Arg(25)->Arg(50);

void BM_ExploreSierpinski(benchmark::State& state) {
  tw::Tas tas = tw::corpus::sierpinski(8);
  for (auto _ : state) benchmark::DoNotOptimize(tw::explore(tas, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExploreSierpinski)->Arg(10)->Arg(20);

void BM_CheckLocalConsistency(benchmark::State& state) {
  tw::Tas tas = tw::corpus::sierpinski(8);
  for (auto _ : state) benchmark::DoNotOptimize(tw::verify_locally_consistent(tas, 25));
}
BENCHMARK(BM_CheckLocalConsistency);

void BM_Compile(benchmark::State& state) {
  tw::Tas tas = tw::corpus::counter(4);
  for (auto _ : state) benchmark::DoNotOptimize(tw::compile(tas));
}
BENCHMARK(BM_Compile);

void BM_TraceLookup(benchmark::State& state) {
  tw::CompiledSystem cs = tw::compile(tw::corpus::nondet_elbow());
  tw::BitString b("0101");
  for (auto _ : state) benchmark::DoNotOptimize(tw::trace_lookup(cs.table, cs.glues, 1948, b));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cs.table.size()));
}
BENCHMARK(BM_TraceLookup);

void BM_DirectLookup(benchmark::State& state) {
  tw::CompiledSystem cs = tw::compile(tw::corpus::nondet_elbow());
  for (auto _ : state) benchmark::DoNotOptimize(tw::direct_lookup(cs.w, cs.glues, 1948, 1));
}
BENCHMARK(BM_DirectLookup);

void BM_MacroExplore(benchmark::State& state) {
  tw::CompiledSystem cs = tw::compile(tw::corpus::counter(4));
  for (auto _ : state) benchmark::DoNotOptimize(tw::macro_explore(cs, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MacroExplore)->Arg(6)->Arg(15);

void BM_FullReport(benchmark::State& state) {
  tw::CompiledSystem cs = tw::compile(tw::corpus::counter(4));
  for (auto _ : state) benchmark::DoNotOptimize(tw::full_report(cs, 15));
}
BENCHMARK(BM_FullReport);

}  // namespace
BENCHMARK_MAIN();
