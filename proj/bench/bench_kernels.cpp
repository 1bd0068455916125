// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "tspread/betti.hpp"
#include "tspread/construct.hpp"
#include "tspread/count.hpp"

using namespace tspread;

namespace {

const Context kCountCtx(40, 2);
const Monomial kCountMon{3, 8, 12, 18, 23, 28, 33, 38};

const Context kShadowCtx(30, 2);

std::vector<Monomial> shadow_input() {
  return initial_lex_segment(5, 4000, kShadowCtx);
}

MonomialIdeal betti_input() {
  const Context ctx(40, 2);
  return t_ss_ideal(MonomialIdeal(ctx, {{4, 20}, {3, 9, 30}, {2, 6, 12, 25, 38}}));
}

void set_threads(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
}

void BM_CountSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::count_t_ss_mon(kCountMon, kCountCtx));
}

void BM_CountParallel(benchmark::State& state) {
  set_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(count_t_ss_mon(kCountMon, kCountCtx));
}

void BM_ShadowSerial(benchmark::State& state) {
  const auto l = shadow_input();
  for (auto _ : state) benchmark::DoNotOptimize(serial::t_shadow_set(l, kShadowCtx));
}

void BM_ShadowParallel(benchmark::State& state) {
  set_threads(state);
  const auto l = shadow_input();
  for (auto _ : state) benchmark::DoNotOptimize(t_shadow_set(l, kShadowCtx));
}

void BM_BettiSerial(benchmark::State& state) {
  const auto I = betti_input();
  state.counters["generators"] = static_cast<double>(I.num_generators());
  for (auto _ : state) benchmark::DoNotOptimize(serial::graded_betti(I));
}

void BM_BettiParallel(benchmark::State& state) {
  set_threads(state);
  const auto I = betti_input();
  state.counters["generators"] = static_cast<double>(I.num_generators());
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(I));
}

}  // namespace

BENCHMARK(BM_CountSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShadowSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShadowParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BettiSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
