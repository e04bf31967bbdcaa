// Serial reference vs OpenMP kernels, and the three Bernoulli row methods.
#include "irreg/eigenstructure.hpp"
#include "irreg/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace irreg;

static void BM_SweepSerial(benchmark::State& state)
{
    const auto p_max = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(irregular_sweep_serial(p_max));
}
BENCHMARK(BM_SweepSerial)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

static void BM_SweepParallel(benchmark::State& state)
{
    const auto p_max = static_cast<std::uint32_t>(state.range(0));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(irregular_sweep(p_max, {.jobs = jobs}));
}
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{2000, 8000}, {2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

static void BM_Row(benchmark::State& state, RowMethod method)
{
    const PrimeModulus p(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bernoulli_row(p, method));
}
BENCHMARK_CAPTURE(BM_Row, naive, RowMethod::Naive)->Arg(1217)->Arg(9829)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Row, voronoi, RowMethod::Voronoi)->Arg(1217)->Arg(9829)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Row, fast, RowMethod::Fast)->Arg(1217)->Arg(9829)->Arg(24989)->Unit(benchmark::kMillisecond);

static void BM_CongruenceSweep(benchmark::State& state)
{
    const auto sets = irregular_sweep(25000, {.jobs = 8}).sets;
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(congruence_sweep(sets, jobs));
}
BENCHMARK(BM_CongruenceSweep)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
