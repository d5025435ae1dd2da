#include <benchmark/benchmark.h>

#include "lgm/fourier.hpp"
#include "lgm/gm.hpp"
#include "lgm/hardy.hpp"
#include "lgm/interpolate.hpp"
#include "lgm/random.hpp"

namespace {

lgm::ComplexSeq sample(std::size_t N) {
    lgm::Rng rng(42);
    return lgm::random_gms2(rng, N);
}

void BM_Gms2Constant(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgm::gms2_constant(a));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gms2Constant)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_KFunctional(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgm::k_functional(a, 0.01));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KFunctional)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_L1NormTrig(benchmark::State& state) {
    const auto a = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lgm::l1_norm_trig(a));
}
BENCHMARK(BM_L1NormTrig)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_HardyReport(benchmark::State& state) {
    lgm::Rng rng(42);
    const auto f = lgm::random_gm_plus(rng, static_cast<std::size_t>(state.range(0)), 2.25, 4.0);
    for (auto _ : state) benchmark::DoNotOptimize(lgm::hardy_report(f, 0.5, 2.0));
}
BENCHMARK(BM_HardyReport)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
