#include <algorithm>
#include <cmath>

#include "surfke/errors.hpp"
#include "surfke/gnb.hpp"

namespace surfke {

GnbModel fit(std::span<const std::vector<double>> features, const std::vector<bool>& labels, double var_smoothing) {
  if (features.size() != labels.size()) throw ConfigError("feature and label counts differ");
  if (!(var_smoothing > 0.0)) throw ConfigError("var_smoothing must be > 0");
  const std::size_t n = features.size();
  const std::size_t n_pos = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), true));
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0) throw TrainingError("cannot fit classifier: no positive (keyphrase) examples");
  if (n_neg == 0) throw TrainingError("cannot fit classifier: no negative (non-keyphrase) examples");

  const std::size_t d = features[0].size();
  for (const auto& row : features)
    if (row.size() != d) throw ConfigError("feature rows have inconsistent dimensions");

  GnbModel m;
  m.var_smoothing = var_smoothing;
  m.prior_pos = static_cast<double>(n_pos) / static_cast<double>(n);
  m.prior_neg = static_cast<double>(n_neg) / static_cast<double>(n);
  m.mean_pos.assign(d, 0.0);
  m.mean_neg.assign(d, 0.0);
  m.var_pos.assign(d, 0.0);
  m.var_neg.assign(d, 0.0);
  std::vector<double> pooled_mean(d, 0.0), pooled_var(d, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    auto& mean = labels[i] ? m.mean_pos : m.mean_neg;
    for (std::size_t j = 0; j < d; ++j) {
      mean[j] += features[i][j];
      pooled_mean[j] += features[i][j];
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    m.mean_pos[j] /= static_cast<double>(n_pos);
    m.mean_neg[j] /= static_cast<double>(n_neg);
    pooled_mean[j] /= static_cast<double>(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& mean = labels[i] ? m.mean_pos : m.mean_neg;
    auto& var = labels[i] ? m.var_pos : m.var_neg;
    for (std::size_t j = 0; j < d; ++j) {
      const double a = features[i][j] - mean[j];
      const double b = features[i][j] - pooled_mean[j];
      var[j] += a * a;
      pooled_var[j] += b * b;
    }
  }
  double max_pooled = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    m.var_pos[j] /= static_cast<double>(n_pos);
    m.var_neg[j] /= static_cast<double>(n_neg);
    max_pooled = std::max(max_pooled, pooled_var[j] / static_cast<double>(n));
  }
  m.variance_floor = var_smoothing * (max_pooled > 0.0 ? max_pooled : 1.0);
  for (std::size_t j = 0; j < d; ++j) {
    m.var_pos[j] = std::max(m.var_pos[j], m.variance_floor);
    m.var_neg[j] = std::max(m.var_neg[j], m.variance_floor);
  }
  return m;
}

std::pair<double, double> log_joint(const GnbModel& model, std::span<const double> x) {
  if (x.size() != model.dim())
    throw ConfigError("feature dimension " + std::to_string(x.size()) + " does not match model dimension " +
                      std::to_string(model.dim()));
  constexpr double kLog2Pi = 1.8378770664093454836;  // log(2*pi)
  double lp = std::log(model.prior_pos);
  double ln = std::log(model.prior_neg);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double dp = x[j] - model.mean_pos[j];
    const double dn = x[j] - model.mean_neg[j];
    lp -= 0.5 * (kLog2Pi + std::log(model.var_pos[j]) + dp * dp / model.var_pos[j]);
    ln -= 0.5 * (kLog2Pi + std::log(model.var_neg[j]) + dn * dn / model.var_neg[j]);
  }
  return {lp, ln};
}

Posterior posterior(const GnbModel& model, std::span<const double> x) {
  const auto [lp, ln] = log_joint(model, x);
  const double top = std::max(lp, ln);
  const double ep = std::exp(lp - top);
  const double en = std::exp(ln - top);
  const double z = ep + en;
  return {ep / z, en / z};
}

double predict_proba(const GnbModel& model, std::span<const double> x) { return posterior(model, x).positive; }

void sort_by_score(std::vector<CandidatePhrase>& cands) {
  std::stable_sort(cands.begin(), cands.end(), [](const CandidatePhrase& a, const CandidatePhrase& b) {
    const double sa = a.score.value_or(0.0);
    const double sb = b.score.value_or(0.0);
    if (sa != sb) return sa > sb;
    // Saturated posteriors (exactly 0 or 1 in double) still differ in log-odds.
    const double ma = a.log_odds.value_or(0.0);
    const double mb = b.log_odds.value_or(0.0);
    if (ma != mb) return ma > mb;
    if (a.first_position != b.first_position) return a.first_position < b.first_position;
    return a.stemmed_form < b.stemmed_form;
  });
}

void rank_candidates(const GnbModel& model, std::vector<CandidatePhrase>& cands) {
  for (auto& c : cands) {
    const auto [lp, ln] = log_joint(model, c.feature);
    c.score = posterior(model, c.feature).positive;
    c.log_odds = lp - ln;
  }
  sort_by_score(cands);
}

std::vector<CandidatePhrase> top_k(const std::vector<CandidatePhrase>& ranked, std::size_t k) {
  if (k < 1) throw ConfigError("top-k cutoff must be >= 1");
  const std::size_t n = std::min(k, ranked.size());
  return {ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace surfke
