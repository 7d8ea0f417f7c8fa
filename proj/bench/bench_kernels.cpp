#include <benchmark/benchmark.h>

#include <random>

#include "cliquealg/corpus.hpp"
#include "cliquealg/groebner.hpp"

using namespace cliquealg;

namespace {

// Erdos-Renyi-ish graph for the clique kernel.
WeightedGraph random_graph(int n, double p, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> verts;
    std::vector<std::tuple<int, int, std::optional<int>>> edges;
    for (int i = 1; i <= n; ++i) verts.emplace_back(i, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (edge(rng)) edges.emplace_back(i, j, std::nullopt);
    return WeightedGraph(std::move(verts), std::move(edges));
}

void BM_cliques_serial(benchmark::State& state) {
    WeightedGraph g = random_graph(static_cast<int>(state.range(0)), 0.4, 42);
    for (auto _ : state) benchmark::DoNotOptimize(cliques_serial(g));
}

void BM_cliques_omp(benchmark::State& state) {
    WeightedGraph g = random_graph(static_cast<int>(state.range(0)), 0.4, 42);
    for (auto _ : state) benchmark::DoNotOptimize(cliques(g));
}

struct CountSetup {
    Presentation pres;
    std::vector<Word> leading;
};

CountSetup pentagon_leading(int degree) {
    CountSetup s;
    WeightedGraph g = corpus_graph("pentagon");
    s.pres = presentation_of(g, {1, 3, 5, 2, 4});
    TruncatedGB gb = mora_truncated(s.pres.relations, s.pres.alphabet, degree);
    s.leading = gb.leading_words();
    return s;
}

void BM_count_normal_words_serial(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    CountSetup s = pentagon_leading(degree);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_normal_words_serial(s.leading, s.pres.alphabet, degree));
}

void BM_count_normal_words_omp(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    CountSetup s = pentagon_leading(degree);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_normal_words(s.leading, s.pres.alphabet, degree));
}

}  // namespace

BENCHMARK(BM_cliques_serial)->Arg(18)->Arg(24);
BENCHMARK(BM_cliques_omp)->Arg(18)->Arg(24);
BENCHMARK(BM_count_normal_words_serial)->Arg(16)->Arg(24);
BENCHMARK(BM_count_normal_words_omp)->Arg(16)->Arg(24);

BENCHMARK_MAIN();
