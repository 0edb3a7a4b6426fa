#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <omp.h>

#include "surfke/embedding.hpp"
#include "surfke/errors.hpp"

namespace surfke {

void EmbeddingConfig::validate() const {
  if (dim < 1) throw ConfigError("embedding dim must be >= 1");
  if (context_window < 1) throw ConfigError("context window must be >= 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) throw ConfigError("learning rate must be > 0");
}

EmbeddingMatrix::EmbeddingMatrix(std::vector<std::string> vocab, std::size_t dim)
    : vocab_(std::move(vocab)), dim_(dim), input_(vocab_.size() * dim, 0.0), output_(vocab_.size() * dim, 0.0) {
  for (std::size_t i = 0; i < vocab_.size(); ++i) index_.emplace(vocab_[i], i);
}

std::span<const double> EmbeddingMatrix::vector(const std::string& word) const {
  const auto it = index_.find(word);
  if (it == index_.end()) throw LookupError("word '" + word + "' has no embedding");
  return input_row(it->second);
}

bool EmbeddingMatrix::all_finite() const {
  const auto finite = [](double x) { return std::isfinite(x); };
  return std::all_of(input_.begin(), input_.end(), finite) && std::all_of(output_.begin(), output_.end(), finite);
}

EmbeddingMatrix init_matrix(std::vector<std::string> vocab, const EmbeddingConfig& cfg) {
  cfg.validate();
  EmbeddingMatrix m(std::move(vocab), cfg.dim);
  Rng rng = Rng::substream(cfg.seed, Stream::kEmbeddingInit);
  const double scale = 1.0 / static_cast<double>(cfg.dim);
  for (double& x : m.input()) x = (rng.uniform() - 0.5) * scale;
  return m;
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double log_sigmoid(double x) {
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_dims(std::span<const double> center, std::span<const double> context,
                std::span<const std::span<const double>> negatives) {
  if (context.size() != center.size()) throw ConfigError("context vector dimension mismatch");
  for (const auto& n : negatives)
    if (n.size() != center.size()) throw ConfigError("negative vector dimension mismatch");
}

}  // namespace

double sgns_pair_loss(std::span<const double> center, std::span<const double> context,
                      std::span<const std::span<const double>> negatives) {
  check_dims(center, context, negatives);
  double loss = -log_sigmoid(dot(center, context));
  for (const auto& n : negatives) loss -= log_sigmoid(-dot(center, n));
  return loss;
}

// d/dx[-log s(x)] = s(x) - 1 ; d/dx[-log s(-x)] = s(x)
SgnsGradient sgns_pair_gradient(std::span<const double> center, std::span<const double> context,
                                std::span<const std::span<const double>> negatives) {
  check_dims(center, context, negatives);
  const std::size_t d = center.size();
  SgnsGradient g;
  g.center.assign(d, 0.0);
  const double pos = dot(center, context);
  const double g0 = sigmoid(pos) - 1.0;
  g.loss = -log_sigmoid(pos);
  g.context.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    g.center[j] += g0 * context[j];
    g.context[j] = g0 * center[j];
  }
  for (const auto& n : negatives) {
    const double s = dot(center, n);
    const double gi = sigmoid(s);
    g.loss -= log_sigmoid(-s);
    auto& gn = g.negatives.emplace_back(d);
    for (std::size_t j = 0; j < d; ++j) {
      g.center[j] += gi * n[j];
      gn[j] = gi * center[j];
    }
  }
  return g;
}

namespace {

// Shared kernel for sgns_pair_step and the trainers. `coef` holds one slot per
// output row (context first), `grad` has dim entries.
double pair_step(EmbeddingMatrix& m, VertexId center, VertexId context, std::span<const VertexId> negatives,
                 double lr, std::span<double> coef, std::span<double> grad) {
  const std::size_t d = m.dim();
  const auto u = m.input_row(center);
  double loss = 0.0;
  {
    const double s = dot(u, m.output_row(context));
    coef[0] = sigmoid(s) - 1.0;
    loss -= log_sigmoid(s);
  }
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const double s = dot(u, m.output_row(negatives[i]));
    coef[i + 1] = sigmoid(s);
    loss -= log_sigmoid(-s);
  }
  std::fill(grad.begin(), grad.end(), 0.0);
  {
    const auto v = m.output_row(context);
    for (std::size_t j = 0; j < d; ++j) grad[j] += coef[0] * v[j];
  }
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const auto v = m.output_row(negatives[i]);
    for (std::size_t j = 0; j < d; ++j) grad[j] += coef[i + 1] * v[j];
  }
  {
    const auto v = m.output_row(context);
    const double step = lr * coef[0];
    for (std::size_t j = 0; j < d; ++j) v[j] -= step * u[j];
  }
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const auto v = m.output_row(negatives[i]);
    const double step = lr * coef[i + 1];
    for (std::size_t j = 0; j < d; ++j) v[j] -= step * u[j];
  }
  for (std::size_t j = 0; j < d; ++j) u[j] -= lr * grad[j];
  return loss;
}

}  // namespace

double sgns_pair_step(EmbeddingMatrix& m, VertexId center, VertexId context, std::span<const VertexId> negatives,
                      double lr) {
  if (center >= m.rows() || context >= m.rows()) throw LookupError("pair id out of range");
  for (VertexId n : negatives)
    if (n >= m.rows()) throw LookupError("negative id out of range");
  std::vector<double> coef(negatives.size() + 1);
  std::vector<double> grad(m.dim());
  return pair_step(m, center, context, negatives, lr, coef, grad);
}

namespace detail {

TrainingPlan::TrainingPlan(const std::vector<Walk>& corpus, std::size_t vocab_size, const EmbeddingConfig& cfg)
    : context_window_(cfg.context_window), learning_rate_(cfg.learning_rate), seed_(cfg.seed), walks_(corpus.size()) {
  std::vector<std::size_t> counts(vocab_size, 0);
  for (const Walk& w : corpus) {
    pairs_per_epoch_ += pairs_in(w);
    for (VertexId v : w.vertices) {
      if (v >= vocab_size) throw LookupError("walk vertex outside the vocabulary");
      ++counts[v];
    }
  }
  total_steps_ = pairs_per_epoch_ * cfg.epochs;
  cumulative_.resize(vocab_size);
  double acc = 0.0;
  for (std::size_t v = 0; v < vocab_size; ++v) {
    acc += std::pow(static_cast<double>(counts[v]), 0.75);
    cumulative_[v] = acc;
  }
}

std::vector<std::size_t> TrainingPlan::epoch_order(std::size_t epoch) const {
  std::vector<std::size_t> order(walks_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng = Rng::substream(seed_, Stream::kEpochShuffle, {epoch});
  rng.shuffle(std::span<std::size_t>(order));
  return order;
}

std::size_t TrainingPlan::pairs_in(const Walk& w) const {
  const std::size_t n = w.vertices.size();
  std::size_t pairs = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t lo = t >= context_window_ ? t - context_window_ : 0;
    const std::size_t hi = std::min(n - 1, t + context_window_);
    pairs += hi - lo;
  }
  return pairs;
}

double TrainingPlan::learning_rate_at(std::size_t step) const {
  if (total_steps_ <= 1) return learning_rate_;
  const double progress = static_cast<double>(step) / static_cast<double>(total_steps_ - 1);
  return learning_rate_ * (1.0 - 0.99 * std::min(progress, 1.0));
}

VertexId TrainingPlan::draw_negative(Rng& rng) const {
  const double r = rng.uniform() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  const auto idx = static_cast<std::size_t>(it - cumulative_.begin());
  return static_cast<VertexId>(std::min(idx, cumulative_.size() - 1));
}

Rng negative_rng(std::uint64_t seed, std::size_t epoch, std::size_t walk_index) {
  return Rng::substream(seed, Stream::kNegativeSampling, {epoch, walk_index});
}

double train_walk(EmbeddingMatrix& m, const Walk& walk, const TrainingPlan& plan, const EmbeddingConfig& cfg,
                  std::size_t first_step, Rng& rng, std::vector<VertexId>& negatives,
                  std::vector<double>& grad) {
  const auto& vs = walk.vertices;
  const std::size_t n = vs.size();
  const std::size_t c = cfg.context_window;
  std::vector<double> coef(cfg.negatives + 1);
  grad.resize(m.dim());
  double loss = 0.0;
  std::size_t step = first_step;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t lo = t >= c ? t - c : 0;
    const std::size_t hi = std::min(n - 1, t + c);
    for (std::size_t s = lo; s <= hi; ++s) {
      if (s == t) continue;
      const VertexId center = vs[t];
      const VertexId context = vs[s];
      negatives.clear();
      if (plan.has_negatives()) {
        for (std::size_t k = 0; k < cfg.negatives; ++k) {
          const VertexId neg = plan.draw_negative(rng);
          if (neg != context) negatives.push_back(neg);
        }
      }
      loss += pair_step(m, center, context, negatives, plan.learning_rate_at(step), coef, grad);
      ++step;
    }
  }
  return loss;
}

}  // namespace detail

EmbeddingMatrix train_embeddings(const std::vector<Walk>& corpus, std::vector<std::string> vocab,
                                 const EmbeddingConfig& cfg, TrainingStats* stats) {
  if (cfg.deterministic) return serial::train_embeddings(corpus, std::move(vocab), cfg, stats);
  return train_embeddings_parallel(corpus, std::move(vocab), cfg, stats);
}

EmbeddingMatrix train_embeddings_parallel(const std::vector<Walk>& corpus, std::vector<std::string> vocab,
                                          const EmbeddingConfig& cfg, TrainingStats* stats) {
  EmbeddingMatrix m = init_matrix(std::move(vocab), cfg);
  const detail::TrainingPlan plan(corpus, m.rows(), cfg);
  if (stats) {
    stats->pairs_per_epoch = plan.pairs_per_epoch();
    stats->epoch_mean_loss.clear();
  }
  const int nthreads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    const auto order = plan.epoch_order(epoch);
    std::vector<std::size_t> first_step(order.size());
    std::size_t step = epoch * plan.pairs_per_epoch();
    for (std::size_t i = 0; i < order.size(); ++i) {
      first_step[i] = step;
      step += plan.pairs_in(corpus[order[i]]);
    }
    double loss = 0.0;
    const auto count = static_cast<std::int64_t>(order.size());
#pragma omp parallel num_threads(nthreads) reduction(+ : loss)
    {
      std::vector<VertexId> negatives;
      std::vector<double> grad;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        Rng rng = detail::negative_rng(cfg.seed, epoch, order[idx]);
        loss += detail::train_walk(m, corpus[order[idx]], plan, cfg, first_step[idx], rng, negatives, grad);
      }
    }
    if (stats) stats->epoch_mean_loss.push_back(plan.pairs_per_epoch() ? loss / plan.pairs_per_epoch() : 0.0);
  }
  return m;
}

void write_embeddings(const EmbeddingMatrix& m, std::ostream& out) {
  out << m.rows() << ' ' << m.dim() << '\n';
  char buf[64];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << m.vocab()[r];
    for (double x : m.input_row(r)) {
      std::snprintf(buf, sizeof buf, " %.6f", x);
      out << buf;
    }
    out << '\n';
  }
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  const double na = std::sqrt(dot(a, a));
  const double nb = std::sqrt(dot(b, b));
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (na * nb);
}

}  // namespace surfke
