#include <benchmark/benchmark.h>

#include "hyperthresh/absorbing.hpp"
#include "hyperthresh/auxgraph.hpp"
#include "hyperthresh/extremal.hpp"
#include "hyperthresh/matching.hpp"

namespace ht = hyperthresh;

namespace {

void BM_FindPerfectMatchingRandom(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto h = ht::random_hypergraph(n, 3, 0.05, 1);
    for (auto _ : state) benchmark::DoNotOptimize(ht::find_perfect_matching(h));
}
BENCHMARK(BM_FindPerfectMatchingRandom)->DenseRange(12, 24, 6);

// Proving absence exhausts the search tree; the parity structure is the hard case.
void BM_FindPerfectMatchingExtremal(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    // Family members of odd kind have |A| of parity opposite to n/k.
    const int want = (n / 3 + 1) % 2;
    const int size_a = n / 2 % 2 == want ? n / 2 : n / 2 - 1;
    const auto h = ht::build({ht::Kind::odd, ht::Bipartition::canonical(n, size_a), 3});
    for (auto _ : state) benchmark::DoNotOptimize(ht::search_perfect_matching(h, h.vertices()));
}
BENCHMARK(BM_FindPerfectMatchingExtremal)->DenseRange(9, 15, 3);

void BM_ThresholdClosedForm(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ht::threshold(n, 4, 3));
}
BENCHMARK(BM_ThresholdClosedForm)->Arg(16)->Arg(32)->Arg(64);

void BM_MinDegreeBruteForce(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto h = ht::random_hypergraph(n, 4, 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ht::min_l_degree(h, 3));
}
BENCHMARK(BM_MinDegreeBruteForce)->Arg(12)->Arg(18)->Arg(24);

void BM_AuxEdgeCount(benchmark::State& state)
{
    const auto h = ht::random_hypergraph(static_cast<int>(state.range(0)), 4, 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(ht::aux_edge_count(h));
}
BENCHMARK(BM_AuxEdgeCount)->Arg(12)->Arg(20);

void BM_CaseA(benchmark::State& state)
{
    const auto h = ht::random_hypergraph(static_cast<int>(state.range(0)), 4, 0.5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(ht::case_a(h, 0.05));
}
BENCHMARK(BM_CaseA)->Arg(12)->Arg(20);

void BM_EditDistanceModel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto h = ht::random_hypergraph(n, 4, 0.5, 5);
    const auto c = ht::parity_coloring(n, 4, ht::VertexSet::prefix(n / 2));
    for (auto _ : state) benchmark::DoNotOptimize(ht::edit_distance_model(h, c));
}
BENCHMARK(BM_EditDistanceModel)->Arg(12)->Arg(20);

void BM_TwoKAbsorbers(benchmark::State& state)
{
    const auto h = ht::random_hypergraph(static_cast<int>(state.range(0)), 3, 0.6, 6);
    for (auto _ : state) benchmark::DoNotOptimize(ht::enumerate_absorbing_2ksets(h, ht::VertexSet::prefix(3)));
}
BENCHMARK(BM_TwoKAbsorbers)->Arg(12)->Arg(15);

void BM_Pipeline(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto h = ht::random_hypergraph(n, 3, 0.5, 7);
    ht::PipelineParams p;
    p.seed = 11;
    for (auto _ : state) benchmark::DoNotOptimize(ht::pm_via_absorption(h, p));
}
BENCHMARK(BM_Pipeline)->Arg(15)->Arg(24)->Arg(30);

} // namespace

BENCHMARK_MAIN();
