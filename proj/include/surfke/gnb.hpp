#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "surfke/candidates.hpp"

namespace surfke {

/// Two-class Gaussian Naive Bayes (positive = keyphrase).
struct GnbModel {
  double prior_pos = 0.5;
  double prior_neg = 0.5;
  std::vector<double> mean_pos, mean_neg;
  std::vector<double> var_pos, var_neg;
  double var_smoothing = 1e-9;
  double variance_floor = 0.0;  // var_smoothing * max pooled per-dimension variance

  std::size_t dim() const { return mean_pos.size(); }

  friend bool operator==(const GnbModel&, const GnbModel&) = default;
};

struct Posterior {
  double positive = 0.0;
  double negative = 0.0;
};

/// Per-class sample means and population variances (divide by class count),
/// each variance floored at var_smoothing * (largest pooled variance over
/// dimensions), or at var_smoothing when every dimension is constant.
/// Throws TrainingError when a class has no examples.
GnbModel fit(std::span<const std::vector<double>> features, const std::vector<bool>& labels,
             double var_smoothing = 1e-9);

/// Class log joint likelihoods: log prior + sum of per-dimension log N(x; mean, var).
std::pair<double, double> log_joint(const GnbModel& model, std::span<const double> x);

/// Both class posteriors, normalised in log space.
Posterior posterior(const GnbModel& model, std::span<const double> x);

/// P(positive | x). Throws ConfigError on dimension mismatch.
double predict_proba(const GnbModel& model, std::span<const double> x);

/// Scores every candidate and sorts by score descending. Equal scores are
/// ordered by log-odds, then earlier first_position, then the
/// lexicographically smaller stemmed form.
void rank_candidates(const GnbModel& model, std::vector<CandidatePhrase>& cands);

/// Sorts already-scored candidates with the same ordering rule.
void sort_by_score(std::vector<CandidatePhrase>& cands);

/// First min(k, size) candidates. Throws ConfigError for k == 0.
std::vector<CandidatePhrase> top_k(const std::vector<CandidatePhrase>& ranked, std::size_t k = 10);

// Model file: see docs/model_format.md.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

struct StoredModel {
  GnbModel model;
  ConfigEcho config;
};

inline constexpr std::string_view kModelMagic = "SURFKE-GNB";
inline constexpr int kModelFormatVersion = 1;

void write_model(std::ostream& out, const GnbModel& model, const ConfigEcho& config);
void save_model(const std::filesystem::path& path, const GnbModel& model, const ConfigEcho& config);
/// Throws ModelError naming `source` on any malformed content.
StoredModel read_model(std::istream& in, const std::string& source);
StoredModel load_model(const std::filesystem::path& path);

}  // namespace surfke
