#include <benchmark/benchmark.h>

#include "tgraph/tgraph.hpp"

using namespace tgraph;

static void BM_LengthA(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(length_A(6, 0.3));
}
BENCHMARK(BM_LengthA);

static void BM_LengthC(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(length_C(6, 0.5));
}
BENCHMARK(BM_LengthC);

static void BM_InvertLengthA(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(invert_length_A(6, 1.0));
}
BENCHMARK(BM_InvertLengthA);

// enumeration cost grows with the number of half-orbits that fit on e3
static void BM_Enumerate(benchmark::State& st) {
    const double ell = static_cast<double>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate({6, 1, ell}));
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(2)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ThetaScan(benchmark::State& st) {
    const auto grid = log_grid(kDefaultLambdaMin, kDefaultLambdaMax, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(theta_scan(6, grid));
}
BENCHMARK(BM_ThetaScan)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ProbeSmall(benchmark::State& st) {
    PathSpec s;
    s.regime = Regime::small_ell;
    for (auto _ : st) benchmark::DoNotOptimize(second_derivative({8, 1, 0.05}, s));
}
BENCHMARK(BM_ProbeSmall)->Unit(benchmark::kMillisecond);

static void BM_ProbeLarge(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(second_derivative({8, 1, 20}, PathSpec{}));
}
BENCHMARK(BM_ProbeLarge)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
