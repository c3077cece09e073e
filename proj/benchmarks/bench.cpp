// Micro-benchmarks for the hot paths: canonical forms, factor enumeration,
// and the census pipeline. Numbers here guide optimization; correctness
// lives in the test suites.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "starfactor/canonical.hpp"
#include "starfactor/graph.hpp"
#include "starfactor/search.hpp"
#include "starfactor/star_factor.hpp"
#include "starfactor/uniformity.hpp"

using namespace starfactor;

namespace {

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

std::vector<Graph> random_graphs(int n, double p, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Graph> out;
    for (int k = 0; k < count; ++k) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

void bm_canonical_form(benchmark::State& state) {
    const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.4, 64, 12345u);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(graphs[i]));
        i = (i + 1) % graphs.size();
    }
}
BENCHMARK(bm_canonical_form)->Arg(8)->Arg(10)->Arg(12);

void bm_factor_enumeration(benchmark::State& state) {
    const Graph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        StarFactorStream stream(g);
        std::uint64_t count = 0;
        while (stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bm_factor_enumeration)->Arg(8)->Arg(12)->Arg(16);

void bm_uniformity_check(benchmark::State& state) {
    const auto graphs = random_graphs(7, 0.5, 64, 999u);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_uniform(graphs[i]));
        i = (i + 1) % graphs.size();
    }
}
BENCHMARK(bm_uniformity_check);

void bm_census_girth3(benchmark::State& state) {
    Constraints c;
    c.min_degree = 2;
    c.girth_exact = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(census_uniform(static_cast<int>(state.range(0)), c));
    }
}
BENCHMARK(bm_census_girth3)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
