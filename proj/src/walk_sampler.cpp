#include <algorithm>
#include <ostream>

#include <omp.h>

#include "surfke/errors.hpp"
#include "surfke/walk_sampler.hpp"

namespace surfke {

void WalkConfig::validate() const {
  if (walks_per_node < 1) throw ConfigError("walks_per_node must be >= 1");
  if (walk_length < 2) throw ConfigError("walk_length must be >= 2");
}

double TransitionDistribution::probability_of(VertexId x) const {
  const auto it = std::lower_bound(targets.begin(), targets.end(), x);
  if (it == targets.end() || *it != x) return 0.0;
  return probabilities[static_cast<std::size_t>(it - targets.begin())];
}

TransitionDistribution transition_distribution(const WordGraph& g, VertexId v) {
  TransitionDistribution d;
  const auto ids = g.neighbor_ids(v);
  const auto ws = g.neighbor_weights(v);
  d.targets.assign(ids.begin(), ids.end());
  d.weights.assign(ws.begin(), ws.end());
  for (EdgeWeight w : ws) d.total += w;
  d.probabilities.reserve(ws.size());
  for (EdgeWeight w : ws) d.probabilities.push_back(static_cast<double>(w) / static_cast<double>(d.total));
  return d;
}

bool sample_next(const WordGraph& g, VertexId current, Rng& rng, VertexId& next) {
  const auto ids = g.neighbor_ids(current);
  if (ids.empty()) return false;
  const auto ws = g.neighbor_weights(current);
  EdgeWeight total = 0;
  for (EdgeWeight w : ws) total += w;
  EdgeWeight r = rng.below(total);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (r < ws[i]) {
      next = ids[i];
      return true;
    }
    r -= ws[i];
  }
  next = ids.back();  // unreachable: r < total
  return true;
}

Walk sample_walk(const WordGraph& g, VertexId start, const WalkConfig& cfg, Rng& rng) {
  if (start >= g.vertex_count()) throw LookupError("walk start vertex out of range");
  Walk walk;
  walk.vertices.reserve(cfg.walk_length);
  walk.vertices.push_back(start);
  VertexId current = start;
  while (walk.vertices.size() < cfg.walk_length) {
    VertexId next;
    if (!sample_next(g, current, rng, next)) break;
    walk.vertices.push_back(next);
    current = next;
  }
  return walk;
}

Rng walk_rng(std::uint64_t seed, VertexId vertex, std::size_t walk_index) {
  return Rng::substream(seed, Stream::kWalk, {vertex, walk_index});
}

std::vector<Walk> generate_corpus(const WordGraph& g, const WalkConfig& cfg, int threads) {
  cfg.validate();
  const std::size_t n = g.vertex_count();
  const std::size_t per = cfg.walks_per_node;
  std::vector<Walk> walks(n * per);
  const auto total = static_cast<std::int64_t>(walks.size());
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(nthreads) if (total > 256)
  for (std::int64_t slot = 0; slot < total; ++slot) {
    const auto vertex = static_cast<VertexId>(static_cast<std::size_t>(slot) / per);
    const std::size_t index = static_cast<std::size_t>(slot) % per;
    Rng rng = walk_rng(cfg.seed, vertex, index);
    walks[static_cast<std::size_t>(slot)] = sample_walk(g, vertex, cfg, rng);
  }
  return walks;
}

void write_walks(const WordGraph& g, const std::vector<Walk>& walks, std::ostream& out) {
  for (const Walk& w : walks) {
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
      if (i) out << ' ';
      out << g.word(w.vertices[i]);
    }
    out << '\n';
  }
}

}  // namespace surfke
