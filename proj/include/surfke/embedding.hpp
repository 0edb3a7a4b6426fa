#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "surfke/graph.hpp"
#include "surfke/walk_sampler.hpp"

namespace surfke {

struct EmbeddingConfig {
  std::size_t dim = 128;
  std::size_t context_window = 5;  // walk positions on each side
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  double learning_rate = 0.025;  // decays linearly to learning_rate / 100
  std::uint64_t seed = 42;
  bool deterministic = true;  // false: lock-free parallel updates
  int threads = 0;            // 0: OpenMP default

  void validate() const;
};

/// Row-major |V| x d input ("published") and output (context) vectors.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::vector<std::string> vocab, std::size_t dim);

  std::size_t rows() const { return vocab_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& vocab() const { return vocab_; }

  std::span<double> input_row(std::size_t r) { return {input_.data() + r * dim_, dim_}; }
  std::span<const double> input_row(std::size_t r) const { return {input_.data() + r * dim_, dim_}; }
  std::span<double> output_row(std::size_t r) { return {output_.data() + r * dim_, dim_}; }
  std::span<const double> output_row(std::size_t r) const { return {output_.data() + r * dim_, dim_}; }

  std::vector<double>& input() { return input_; }
  const std::vector<double>& input() const { return input_; }
  std::vector<double>& output() { return output_; }
  const std::vector<double>& output() const { return output_; }

  bool contains(const std::string& word) const { return index_.contains(word); }
  /// Input vector of `word`. Throws LookupError for unknown words.
  std::span<const double> vector(const std::string& word) const;

  bool all_finite() const;

  friend bool operator==(const EmbeddingMatrix& a, const EmbeddingMatrix& b) {
    return a.dim_ == b.dim_ && a.vocab_ == b.vocab_ && a.input_ == b.input_ && a.output_ == b.output_;
  }

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t dim_ = 0;
  std::vector<double> input_;
  std::vector<double> output_;
};

/// Input vectors uniform in [-0.5/d, 0.5/d] from the embedding-init
/// substream; output vectors zero.
EmbeddingMatrix init_matrix(std::vector<std::string> vocab, const EmbeddingConfig& cfg);

double sigmoid(double x);
/// log(sigmoid(x)) without overflow for large |x|.
double log_sigmoid(double x);

/// -log s(u.v) - sum_i log s(-u.n_i)
double sgns_pair_loss(std::span<const double> center, std::span<const double> context,
                      std::span<const std::span<const double>> negatives);

struct SgnsGradient {
  double loss = 0.0;
  std::vector<double> center;
  std::vector<double> context;
  std::vector<std::vector<double>> negatives;
};

/// Analytic gradient of sgns_pair_loss with respect to every argument.
SgnsGradient sgns_pair_gradient(std::span<const double> center, std::span<const double> context,
                                std::span<const std::span<const double>> negatives);

/// One gradient-descent step on sgns_pair_loss for (center, context,
/// negatives). Touches only the center input row and the context/negative
/// output rows. All coefficients are taken from the pre-step values, so
/// repeated negative ids receive the exact summed gradient. Returns the
/// pre-step loss.
double sgns_pair_step(EmbeddingMatrix& m, VertexId center, VertexId context,
                      std::span<const VertexId> negatives, double lr);

struct TrainingStats {
  std::size_t pairs_per_epoch = 0;
  std::vector<double> epoch_mean_loss;
};

/// Skip-gram with negative sampling over the walk corpus. Every position t'
/// with 0 < |t - t'| <= context_window around position t forms a (center,
/// context) pair; negatives come from corpus counts raised to the 3/4 power.
/// Dispatches to serial::train_embeddings when cfg.deterministic, otherwise
/// to the lock-free parallel trainer.
EmbeddingMatrix train_embeddings(const std::vector<Walk>& corpus, std::vector<std::string> vocab,
                                 const EmbeddingConfig& cfg, TrainingStats* stats = nullptr);

/// Lock-free (Hogwild) OpenMP trainer. Workers update shared rows without
/// synchronisation, so results depend on scheduling; with one thread it is
/// bit-identical to the serial reference.
EmbeddingMatrix train_embeddings_parallel(const std::vector<Walk>& corpus, std::vector<std::string> vocab,
                                          const EmbeddingConfig& cfg, TrainingStats* stats = nullptr);

/// Debug dump: `<rows> <dim>` then `word v1 ... vd` per row, 6 decimals.
void write_embeddings(const EmbeddingMatrix& m, std::ostream& out);

double cosine_similarity(std::span<const double> a, std::span<const double> b);

namespace serial {
/// Reference trainer: strictly sequential, bit-reproducible for a fixed seed.
EmbeddingMatrix train_embeddings(const std::vector<Walk>& corpus, std::vector<std::string> vocab,
                                 const EmbeddingConfig& cfg, TrainingStats* stats = nullptr);
}  // namespace serial

namespace detail {

/// Schedule shared by the serial and parallel trainers.
class TrainingPlan {
 public:
  TrainingPlan(const std::vector<Walk>& corpus, std::size_t vocab_size, const EmbeddingConfig& cfg);

  std::size_t pairs_per_epoch() const { return pairs_per_epoch_; }
  /// Walk visiting order for an epoch (seeded shuffle).
  std::vector<std::size_t> epoch_order(std::size_t epoch) const;
  /// Number of (center, context) pairs a walk contributes.
  std::size_t pairs_in(const Walk& w) const;
  double learning_rate_at(std::size_t step) const;
  VertexId draw_negative(Rng& rng) const;
  bool has_negatives() const { return !cumulative_.empty() && cumulative_.back() > 0.0; }

 private:
  std::size_t context_window_;
  double learning_rate_;
  std::uint64_t seed_;
  std::size_t walks_ = 0;
  std::size_t pairs_per_epoch_ = 0;
  std::size_t total_steps_ = 0;
  std::vector<double> cumulative_;  // unigram^0.75 CDF
};

/// Trains every pair of one walk; `first_step` is the global index of its
/// first pair (for the learning-rate schedule). Returns the summed loss.
double train_walk(EmbeddingMatrix& m, const Walk& walk, const TrainingPlan& plan, const EmbeddingConfig& cfg,
                  std::size_t first_step, Rng& negative_rng, std::vector<VertexId>& negatives_scratch,
                  std::vector<double>& grad_scratch);

Rng negative_rng(std::uint64_t seed, std::size_t epoch, std::size_t walk_index);

}  // namespace detail

}  // namespace surfke
