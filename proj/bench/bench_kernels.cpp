// Serial reference vs OpenMP kernels on the workloads the acceptance suite
// runs. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "hurwitz/sweep.hpp"

namespace {

using hurwitz::CharProfile;

void BM_TableSerial(benchmark::State& state)
{
    const int e = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz::generate_table_serial(4, e, 30, CharProfile::char0()));
    }
}

void BM_TableParallel(benchmark::State& state)
{
    const int e = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz::generate_table(4, e, 30, CharProfile::char0()));
    }
}

void BM_OracleSweepSerial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz::oracle_sweep_serial({4, 9}, {1, 25}, {1, 10}));
    }
}

void BM_OracleSweepParallel(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz::oracle_sweep({4, 9}, {1, 25}, {1, 10}));
    }
}

void BM_GridSerial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz::classify_grid_serial({4, 6}, {3, 20}, {3, 20}, CharProfile::char0()));
    }
}

void BM_GridParallel(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz::classify_grid({4, 6}, {3, 20}, {3, 20}, CharProfile::char0()));
    }
}

}  // namespace

BENCHMARK(BM_TableSerial)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
