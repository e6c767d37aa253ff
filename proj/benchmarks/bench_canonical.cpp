#include <benchmark/benchmark.h>

#include <random>

#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"
#include "turan/graph6.hpp"

using namespace turan;

static void BM_CanonicalRandom(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::vector<SmallGraph> graphs;
    for (int i = 0; i < 64; ++i) {
        SmallGraph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() & 1) g.add_edge(a, b);
        graphs.push_back(g);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_key(graphs[i++ & 63]));
    }
}
BENCHMARK(BM_CanonicalRandom)->Arg(8)->Arg(10)->Arg(12)->Arg(16);

static void BM_CanonicalTuranGraph(benchmark::State& state) {
    SmallGraph g = turan_graph(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalTuranGraph)->Arg(9)->Arg(12)->Arg(15);

static void BM_EnumerateLevel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto prev = enumerate_graphs(n - 1);
    for (auto _ : state) {
        auto level = extend_level(prev, n, LLONG_MAX, nullptr);
        benchmark::DoNotOptimize(level.size());
    }
}
BENCHMARK(BM_EnumerateLevel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Graph6RoundTrip(benchmark::State& state) {
    SmallGraph g = turan_graph(32, 4);
    for (auto _ : state) benchmark::DoNotOptimize(graph6_decode(graph6_encode(g)).edge_count());
}
BENCHMARK(BM_Graph6RoundTrip);
