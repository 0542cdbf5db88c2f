// Serial reference kernels against their OpenMP counterparts.
#include "subexp/generators.hpp"
#include "subexp/graph.hpp"
#include "subexp/kernels.hpp"
#include "subexp/separators.hpp"

#include <benchmark/benchmark.h>

using namespace subexp;

namespace {

Graph separator_instance(int n) { return subdivide_edges(random_bounded_degree(n, 3, 4 * n, 11), 1); }

template <bool Parallel>
void BM_BalancedSeparator(benchmark::State& state) {
    const Graph g = separator_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const auto s = Parallel ? exact_min_balanced_separation(g, 64) : exact_min_balanced_separation_serial(g, 64);
        benchmark::DoNotOptimize(s.size);
    }
    state.counters["n"] = g.n();
}

template <bool Parallel>
void BM_EdgeExpansion(benchmark::State& state) {
    const auto bg = BitGraph::from(random_bounded_degree(static_cast<int>(state.range(0)), 3, 200, 5));
    for (auto _ : state) {
        const auto e = Parallel ? kernels::omp::min_edge_expansion(bg) : kernels::serial::min_edge_expansion(bg);
        benchmark::DoNotOptimize(e.cut);
    }
}

template <bool Parallel>
void BM_ShallowMinor(benchmark::State& state) {
    const auto bg = BitGraph::from(random_gnp(static_cast<int>(state.range(0)), 0.35, 2));
    for (auto _ : state) {
        const auto c = Parallel ? kernels::omp::densest_shallow_minor(bg, 1) : kernels::serial::densest_shallow_minor(bg, 1);
        benchmark::DoNotOptimize(c.edges);
    }
}

}  // namespace

BENCHMARK(BM_BalancedSeparator<false>)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BalancedSeparator<true>)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EdgeExpansion<false>)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdgeExpansion<true>)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShallowMinor<false>)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShallowMinor<true>)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
