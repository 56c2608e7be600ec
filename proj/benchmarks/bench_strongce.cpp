#include <benchmark/benchmark.h>

#include "strongce/engine.hpp"
#include "strongce/exact.hpp"
#include "strongce/generators.hpp"
#include "strongce/hall.hpp"
#include "strongce/ordering.hpp"
#include "strongce/polynomial.hpp"

using namespace strongce;

namespace {

// Graph families indexed by the benchmark argument.
MultiGraph family(int which, Rng& rng) {
    switch (which) {
        case 0: return random_tree(64, 4, rng);
        case 1: return random_pairing_regular4(32, rng);
        case 2: return random_simple_regular4(64, rng);
        case 3: return random_bipartite_regular4(32, rng);
        case 4: return relabeled(robertson_graph(), rng);
        default: return random_lift(cage_4_6(), rng);
    }
}

const char* family_name(int which) {
    static const char* names[] = {"tree64", "pairing32", "simple64", "bipartite64", "girth5", "girth6"};
    return names[which];
}

}  // namespace

static void BM_StrongListColor(benchmark::State& state) {
    Rng rng(static_cast<std::uint64_t>(state.range(0)));
    const auto g = family(static_cast<int>(state.range(0)), rng);
    const auto lists = random_lists(g.edge_count(), 22, 66, rng);
    for (auto _ : state) {
        auto out = strong_list_color(g, lists);
        benchmark::DoNotOptimize(out.coloring.data());
    }
    state.SetLabel(family_name(static_cast<int>(state.range(0))));
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_StrongListColor)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

static void BM_ColorAllButVertex(benchmark::State& state) {
    Rng rng(1);
    const auto g = random_simple_regular4(static_cast<std::size_t>(state.range(0)), rng);
    const auto lists = random_lists(g.edge_count(), 21, 63, rng);
    for (auto _ : state) {
        auto pc = color_all_but_vertex(g, lists, 0);
        benchmark::DoNotOptimize(pc.colored_count());
    }
}
BENCHMARK(BM_ColorAllButVertex)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_FiveCycleCoefficient(benchmark::State& state) {
    const auto factors = five_cycle_factors();
    const auto targets = five_cycle_targets();
    for (auto _ : state) benchmark::DoNotOptimize(product_coefficient(9, factors, targets));
}
BENCHMARK(BM_FiveCycleCoefficient)->Unit(benchmark::kMillisecond);

static void BM_MaxDiscrepancy(benchmark::State& state) {
    Rng rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto lists = random_lists(n, 3, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(max_discrepancy(lists.lists()).disc);
}
BENCHMARK(BM_MaxDiscrepancy)->Arg(12)->Arg(32)->Arg(128);

static void BM_ExactStrongIndex(benchmark::State& state) {
    const auto g = cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_strong_chromatic_index(g));
}
BENCHMARK(BM_ExactStrongIndex)->Arg(5)->Arg(11)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_Classify(benchmark::State& state) {
    Rng rng(3);
    const auto g = random_lift(cage_4_6(), rng);
    for (auto _ : state) benchmark::DoNotOptimize(classify(g).index());
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
