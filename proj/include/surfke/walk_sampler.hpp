#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "surfke/graph.hpp"
#include "surfke/rng.hpp"

namespace surfke {

struct WalkConfig {
  std::size_t walks_per_node = 40;
  std::size_t walk_length = 8;  // vertices per walk, >= 2
  std::uint64_t seed = 42;

  void validate() const;
};

struct Walk {
  std::vector<VertexId> vertices;

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Next-step distribution at one vertex. Probabilities are weight / total
/// where total is the weighted degree of the vertex, so the entries of a
/// non-isolated vertex sum to 1. Isolated vertices give an empty distribution.
struct TransitionDistribution {
  std::vector<VertexId> targets;
  std::vector<EdgeWeight> weights;
  EdgeWeight total = 0;
  std::vector<double> probabilities;

  bool empty() const { return targets.empty(); }
  /// 0 for vertices that are not neighbors.
  double probability_of(VertexId x) const;
};

TransitionDistribution transition_distribution(const WordGraph& g, VertexId v);

/// Draws one neighbor of `current` with probability proportional to edge
/// weight, using exact integer arithmetic on the weights. Returns false for
/// isolated vertices.
bool sample_next(const WordGraph& g, VertexId current, Rng& rng, VertexId& next);

/// One weight-biased walk from `start`. Stops early only at an isolated vertex.
Walk sample_walk(const WordGraph& g, VertexId start, const WalkConfig& cfg, Rng& rng);

/// RNG substream for walk `walk_index` starting at `vertex`. Walks are
/// reproducible regardless of which thread samples them.
Rng walk_rng(std::uint64_t seed, VertexId vertex, std::size_t walk_index);

/// walks_per_node walks from every vertex, vertex-major then walk-index
/// order. Parallel over (vertex, walk) pairs with OpenMP; the output is
/// identical to serial::generate_corpus for any thread count.
std::vector<Walk> generate_corpus(const WordGraph& g, const WalkConfig& cfg, int threads = 0);

/// Debug dump: one walk per line, vertex words separated by single spaces.
void write_walks(const WordGraph& g, const std::vector<Walk>& walks, std::ostream& out);

namespace serial {
/// Reference implementation of generate_corpus: one thread, plain loops.
std::vector<Walk> generate_corpus(const WordGraph& g, const WalkConfig& cfg);
}  // namespace serial

}  // namespace surfke
