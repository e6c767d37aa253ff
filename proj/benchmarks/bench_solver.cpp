#include <benchmark/benchmark.h>

#include "turan/ex_search.hpp"
#include "turan/inverse.hpp"

using namespace turan;

static void BM_ExCompleteHostPath(benchmark::State& state) {
    SmallGraph host = complete(static_cast<int>(state.range(0)));
    Pattern p = Pattern::path(3);
    for (auto _ : state) benchmark::DoNotOptimize(ex_exact(host, p).value);
}
BENCHMARK(BM_ExCompleteHostPath)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ExBipartiteC4(benchmark::State& state) {
    SmallGraph host = biclique(4, static_cast<int>(state.range(0)));
    Pattern c4 = Pattern::cycle(4);
    for (auto _ : state) benchmark::DoNotOptimize(ex_exact(host, c4).value);
}
BENCHMARK(BM_ExBipartiteC4)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CherryCertificate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cherry_certificate(240000).success);
}
BENCHMARK(BM_CherryCertificate);

static void BM_InverseTiny(benchmark::State& state) {
    Pattern p3 = Pattern::path(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(inv_ex_exact(3, p3, InverseCaps{5, 10}).value);
}
BENCHMARK(BM_InverseTiny)->Unit(benchmark::kMillisecond);
