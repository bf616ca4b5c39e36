// Serial reference against the OpenMP kernels on the same inputs.

#include "escalier/bijections.hpp"
#include "escalier/counting.hpp"
#include "escalier/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace esc;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void BM_CensusStable(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(3, p, IdealClass::stable, exec_of(state)).total);
}

void BM_CensusStrongly(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(3, p, IdealClass::strongly_stable, exec_of(state)).total);
}

void BM_Listing(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(list_ideals(p, 3, IdealClass::stable, exec_of(state)).items.size());
}

void BM_Oracle(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_order_ideals(3, p, exec_of(state)).items.size());
}

}  // namespace

// second argument: 0 serial, 1 parallel
BENCHMARK(BM_CensusStable)->ArgsProduct({{20, 30, 35}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusStrongly)->ArgsProduct({{20, 30, 35}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Listing)->ArgsProduct({{12, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->ArgsProduct({{10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
