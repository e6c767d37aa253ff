#include <benchmark/benchmark.h>

#include "turan/pattern.hpp"

using namespace turan;

static void BM_ContainsPath(benchmark::State& state) {
    SmallGraph host = turan_graph(static_cast<int>(state.range(0)), 2);
    Pattern p4 = Pattern::path(4);
    for (auto _ : state) benchmark::DoNotOptimize(contains_any(host, p4));
}
BENCHMARK(BM_ContainsPath)->Arg(10)->Arg(18)->Arg(40);

static void BM_ContainsC4Free(benchmark::State& state) {
    // worst case: deciding absence on an incidence-like C4-free graph
    SmallGraph host(13);
    for (int p = 0; p < 3; ++p)
        for (int l = 0; l < 4; ++l) host.add_edge(p, 3 + ((p + l * (p + 1)) % 9) + 1);
    Pattern c4 = Pattern::cycle(4);
    for (auto _ : state) benchmark::DoNotOptimize(contains_any(host, c4));
}
BENCHMARK(BM_ContainsC4Free);

static void BM_LongestPath(benchmark::State& state) {
    SmallGraph g = turan_graph(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(longest_path_edges(g));
}
BENCHMARK(BM_LongestPath)->Arg(9)->Arg(12)->Arg(15);

static void BM_CountCopies(benchmark::State& state) {
    SmallGraph host = complete(static_cast<int>(state.range(0)));
    Pattern c4 = Pattern::cycle(4);
    for (auto _ : state) benchmark::DoNotOptimize(count_copies(c4, host));
}
BENCHMARK(BM_CountCopies)->Arg(7)->Arg(9);
