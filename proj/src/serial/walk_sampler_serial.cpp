#include "surfke/walk_sampler.hpp"

namespace surfke::serial {

std::vector<Walk> generate_corpus(const WordGraph& g, const WalkConfig& cfg) {
  cfg.validate();
  std::vector<Walk> walks;
  walks.reserve(g.vertex_count() * cfg.walks_per_node);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < cfg.walks_per_node; ++i) {
      Rng rng = walk_rng(cfg.seed, v, i);
      walks.push_back(sample_walk(g, v, cfg, rng));
    }
  }
  return walks;
}

}  // namespace surfke::serial
