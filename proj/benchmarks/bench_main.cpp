#include <benchmark/benchmark.h>

#include "kecs/blossom.hpp"
#include "kecs/factor.hpp"
#include "kecs/generators.hpp"
#include "kecs/meta.hpp"
#include "kecs/oracle.hpp"
#include "kecs/patterns.hpp"
#include "kecs/psi_engine.hpp"
#include "kecs/subcubic.hpp"
#include "kecs/vizing.hpp"

using namespace kecs;

namespace {

MultiGraph random_graph(int n, int delta, std::uint64_t seed, bool multi = false)
{
    RandomGraphParams p;
    p.n = n;
    p.max_degree = delta;
    p.density = 0.9;
    p.seed = seed;
    p.multi = multi;
    return gen_random_bounded_degree(p);
}

void BM_PsiMaximize(benchmark::State& state)
{
    const MultiGraph g = random_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(maximize_psi(g).colored_count());
    state.counters["edges"] = g.num_edges();
}
BENCHMARK(BM_PsiMaximize)->ArgsProduct({{50, 200, 800}, {4, 5, 7}})->Unit(benchmark::kMillisecond);

void BM_Subcubic(benchmark::State& state)
{
    const MultiGraph g = random_graph(static_cast<int>(state.range(0)), 3, 12, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_subcubic(g).colored_count());
    state.counters["edges"] = g.num_edges();
}
BENCHMARK(BM_Subcubic)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void BM_VizingBaseline(benchmark::State& state)
{
    const MultiGraph g = random_graph(static_cast<int>(state.range(0)), 6, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(vizing_baseline(g, 5).colored_count());
}
BENCHMARK(BM_VizingBaseline)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_MaxWeightMatching(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    Rng rng(14);
    std::vector<WeightedEdge> es;
    for (int i = 0; i < 4 * n; ++i) {
        const int u = static_cast<int>(rng.below(n));
        const int v = static_cast<int>(rng.below(n));
        if (u != v)
            es.push_back({u, v, static_cast<std::int64_t>(rng.below(100))});
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(max_weight_matching(n, es));
}
BENCHMARK(BM_MaxWeightMatching)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void BM_KMatching(benchmark::State& state)
{
    const MultiGraph g = random_graph(static_cast<int>(state.range(0)), 5, 15);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_k_matching(g, 4).size());
}
BENCHMARK(BM_KMatching)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_MetaLinkedK5(benchmark::State& state)
{
    LinkedPatternParams p;
    p.pattern = "K5";
    p.copies = static_cast<int>(state.range(0));
    p.extra_vertices = 2 * p.copies;
    p.links = 3 * p.copies;
    p.max_degree = 5;
    p.seed = 16;
    const MultiGraph g = gen_linked_patterns(p);
    const ExceptionFamily fam = named_family("K5");
    for (auto _ : state)
        benchmark::DoNotOptimize(run_meta(g, 4, &fam).coloring.colored_count());
    state.counters["edges"] = g.num_edges();
}
BENCHMARK(BM_MetaLinkedK5)->RangeMultiplier(4)->Range(1, 64)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state)
{
    const MultiGraph g = random_graph(static_cast<int>(state.range(0)), 4, 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_max_ecs(g, 3, 64).optimum);
    state.counters["edges"] = g.num_edges();
}
BENCHMARK(BM_Oracle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
