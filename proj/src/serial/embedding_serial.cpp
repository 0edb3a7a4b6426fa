#include "surfke/embedding.hpp"

namespace surfke::serial {

EmbeddingMatrix train_embeddings(const std::vector<Walk>& corpus, std::vector<std::string> vocab,
                                 const EmbeddingConfig& cfg, TrainingStats* stats) {
  EmbeddingMatrix m = init_matrix(std::move(vocab), cfg);
  const detail::TrainingPlan plan(corpus, m.rows(), cfg);
  if (stats) {
    stats->pairs_per_epoch = plan.pairs_per_epoch();
    stats->epoch_mean_loss.clear();
  }
  std::vector<VertexId> negatives;
  std::vector<double> grad;
  std::size_t step = 0;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    double loss = 0.0;
    for (std::size_t walk_index : plan.epoch_order(epoch)) {
      const Walk& walk = corpus[walk_index];
      Rng rng = detail::negative_rng(cfg.seed, epoch, walk_index);
      loss += detail::train_walk(m, walk, plan, cfg, step, rng, negatives, grad);
      step += plan.pairs_in(walk);
    }
    if (stats) stats->epoch_mean_loss.push_back(plan.pairs_per_epoch() ? loss / plan.pairs_per_epoch() : 0.0);
  }
  return m;
}

}  // namespace surfke::serial
