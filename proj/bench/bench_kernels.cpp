// Serial reference vs OpenMP kernels: walk corpus generation and SGNS training.
//
//   ./bench_kernels --benchmark_counters_tabular=true
//
// Arguments are (vertices, threads); threads is ignored by the serial runs.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "surfke/embedding.hpp"
#include "surfke/walk_sampler.hpp"

using namespace surfke;

namespace {

// Sparse random word graph resembling a long document: ~12 neighbors per vertex.
WordGraph random_graph(std::size_t n) {
  Rng rng(n);
  std::vector<std::string> words;
  for (std::size_t i = 0; i < n; ++i) words.push_back("w" + std::to_string(i));
  std::vector<WordGraph::Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (int k = 0; k < 6; ++k) {
      const auto v = static_cast<VertexId>(rng.below(n));
      if (v != u) edges.push_back({u, v, 1 + rng.below(4)});
    }
  return WordGraph::from_edges(words, edges);
}

void BM_WalksSerial(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)));
  const WalkConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(serial::generate_corpus(g, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.vertex_count() * cfg.walks_per_node));
}

void BM_WalksParallel(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)));
  const WalkConfig cfg;
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(generate_corpus(g, cfg, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.vertex_count() * cfg.walks_per_node));
}

void BM_SgnsSerial(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)));
  const auto corpus = generate_corpus(g, WalkConfig{});
  EmbeddingConfig cfg;
  cfg.epochs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(serial::train_embeddings(corpus, g.words(), cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus.size()));
}

void BM_SgnsHogwild(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)));
  const auto corpus = generate_corpus(g, WalkConfig{});
  EmbeddingConfig cfg;
  cfg.epochs = 1;
  cfg.deterministic = false;
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(train_embeddings_parallel(corpus, g.words(), cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus.size()));
}

void thread_sweep(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (int n : {200, 2000})
    for (int t = 1; t <= max_threads; t *= 2) b->Args({n, t});
}

}  // namespace

BENCHMARK(BM_WalksSerial)->Args({200, 1})->Args({2000, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WalksParallel)->Apply(thread_sweep)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SgnsSerial)->Args({200, 1})->Args({2000, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SgnsHogwild)->Apply(thread_sweep)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
