#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "chordcycles/chordsearch.hpp"
#include "chordcycles/coloring.hpp"
#include "chordcycles/cycle.hpp"
#include "chordcycles/extraction.hpp"
#include "chordcycles/gadgets.hpp"
#include "chordcycles/graph.hpp"
#include "chordcycles/numtheory.hpp"

namespace {

using namespace chordcycles;

Graph random_graph(int n, int permille, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 1000) < permille) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

void BM_ChordCount(benchmark::State& state) {
    int ell = static_cast<int>(state.range(0));
    Graph g = Graph::complete_bipartite(ell, ell);
    std::vector<int> verts;
    for (int i = 0; i < ell; ++i) {
        verts.push_back(i);
        verts.push_back(ell + i);
    }
    Cycle hamilton(g, verts);
    for (auto _ : state) benchmark::DoNotOptimize(chord_count(g, hamilton));
}
BENCHMARK(BM_ChordCount)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateCycles(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = Graph::complete(n);
    for (auto _ : state) benchmark::DoNotOptimize(all_cycles(g, n).size());
}
BENCHMARK(BM_EnumerateCycles)->Arg(6)->Arg(7)->Arg(8);

void BM_FindExactChords(benchmark::State& state) {
    Graph g = random_graph(12, 450, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_cycle_with_exact_chords(g, state.range(0), 12));
}
BENCHMARK(BM_FindExactChords)->Arg(3)->Arg(8);

void BM_ChromaticNumber(benchmark::State& state) {
    Graph g = state.range(0) == 0 ? gen_mycielski(4) : random_graph(18, 400, 11);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).colours);
}
BENCHMARK(BM_ChromaticNumber)->Arg(0)->Arg(1);

void BM_CliqueNumber(benchmark::State& state) {
    Graph g = random_graph(22, 500, 13);
    for (auto _ : state) benchmark::DoNotOptimize(clique_number(g).size);
}
BENCHMARK(BM_CliqueNumber);

void BM_TwentySquares(benchmark::State& state) {
    long long k = twenty_squares_threshold(2) + 999;
    for (auto _ : state) benchmark::DoNotOptimize(twenty_squares_above(k, 2).terms.size());
}
BENCHMARK(BM_TwentySquares);

void BM_EightyPronic(benchmark::State& state) {
    long long k = eighty_pronic_threshold(1) + 400;
    for (auto _ : state) benchmark::DoNotOptimize(eighty_pronic(k, 1).terms.size());
}
BENCHMARK(BM_EightyPronic);

void BM_ExtractionSequence(benchmark::State& state) {
    Graph g = gen_mycielski(5);
    for (auto _ : state) benchmark::DoNotOptimize(extraction_sequence(g, 2).steps.size());
}
BENCHMARK(BM_ExtractionSequence);

void BM_HubAssembly(benchmark::State& state) {
    std::vector<int> a(20, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_complete_case(20, 4, a, {}).measured_chords);
}
BENCHMARK(BM_HubAssembly);

}  // namespace

BENCHMARK_MAIN();
