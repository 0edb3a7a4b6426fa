#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "surfke/errors.hpp"
#include "surfke/evaluation.hpp"
#include "surfke/rng.hpp"

namespace surfke {

PrfScore score_document(std::span<const std::string> predicted, std::span<const std::string> gold, std::size_t k,
                        bool strict_at_k) {
  if (gold.empty()) throw ScoringError("cannot score a document with an empty gold set");
  if (k < 1) throw ConfigError("top-k cutoff must be >= 1");
  const std::unordered_set<std::string> gold_set(gold.begin(), gold.end());

  std::unordered_set<std::string> seen;
  std::size_t taken = 0;
  std::size_t hits = 0;
  for (const auto& p : predicted) {
    if (taken == k) break;
    if (!seen.insert(p).second) continue;
    ++taken;
    if (gold_set.contains(p)) ++hits;
  }

  PrfScore s;
  const std::size_t denom = strict_at_k ? k : taken;
  s.precision = denom ? static_cast<double>(hits) / static_cast<double>(denom) : 0.0;
  s.recall = static_cast<double>(hits) / static_cast<double>(gold_set.size());
  const double sum = s.precision + s.recall;
  s.f1 = sum > 0.0 ? 2.0 * s.precision * s.recall / sum : 0.0;
  return s;
}

std::vector<std::size_t> CvPlan::fold_members(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i)
    if (assignment[i] == fold) out.push_back(i);
  return out;
}

CvPlan make_folds(std::size_t documents, std::size_t folds, std::uint64_t seed) {
  if (folds == 0) throw ConfigError("number of folds must be >= 1");
  if (documents < folds)
    throw ConfigError("cannot split " + std::to_string(documents) + " documents into " + std::to_string(folds) +
                      " folds");
  CvPlan plan;
  plan.folds = folds;
  plan.seed = seed;
  std::vector<std::size_t> order(documents);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng = Rng::substream(seed, Stream::kFoldShuffle);
  rng.shuffle(std::span<std::size_t>(order));
  plan.assignment.assign(documents, 0);
  for (std::size_t i = 0; i < documents; ++i) plan.assignment[order[i]] = i % folds;
  return plan;
}

namespace {

std::vector<std::string> ranked_stems(const std::vector<CandidatePhrase>& ranked) {
  std::vector<std::string> out;
  out.reserve(ranked.size());
  for (const auto& c : ranked) out.push_back(c.stemmed_form);
  return out;
}

void require_labelled(const DocumentResult& d) {
  if (d.gold_stems.empty()) throw CorpusError("document '" + d.id + "' has no gold keyphrases (.key file)");
}

}  // namespace

void aggregate(EvalResult& r) {
  r.precision = r.recall = r.f1 = 0.0;
  if (r.per_document.empty()) return;
  for (const auto& d : r.per_document) {
    r.precision += d.score.precision;
    r.recall += d.score.recall;
    r.f1 += d.score.f1;
  }
  const auto n = static_cast<double>(r.per_document.size());
  r.precision /= n;
  r.recall /= n;
  r.f1 /= n;
}

EvalResult cross_validate(const std::vector<DocumentResult>& docs, const PipelineConfig& cfg, const CvPlan& plan,
                          const FoldObserver& observer) {
  if (plan.folds < 2) throw ConfigError("cross-validation needs at least 2 folds (a single fold has no training set)");
  if (plan.assignment.size() != docs.size()) throw ConfigError("fold plan does not match the corpus size");
  for (const auto& d : docs) require_labelled(d);

  EvalResult result;
  result.k = cfg.top_k;
  std::vector<PrfScore> scores(docs.size());
  for (std::size_t fold = 0; fold < plan.folds; ++fold) {
    std::vector<const DocumentResult*> train;
    std::vector<std::string> train_ids, test_ids;
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (plan.assignment[i] == fold) {
        test_ids.push_back(docs[i].id);
      } else {
        train.push_back(&docs[i]);
        train_ids.push_back(docs[i].id);
      }
    }
    if (observer) observer(fold, train_ids, test_ids);
    if (test_ids.empty()) continue;
    const GnbModel model = train_classifier(train, cfg);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (plan.assignment[i] != fold) continue;
      auto ranked = docs[i].candidates;
      rank_candidates(model, ranked);
      scores[i] = score_document(ranked_stems(ranked), docs[i].gold_stems, cfg.top_k, cfg.strict_at_k);
    }
  }
  for (std::size_t i = 0; i < docs.size(); ++i) result.per_document.push_back({docs[i].id, scores[i]});
  aggregate(result);
  return result;
}

EvalResult cross_validate(const std::vector<Document>& corpus, const PipelineConfig& cfg, const CvPlan& plan,
                          int jobs, const FoldObserver& observer) {
  require_gold(corpus);
  if (plan.folds < 2) throw ConfigError("cross-validation needs at least 2 folds (a single fold has no training set)");
  return cross_validate(process_corpus(corpus, cfg, jobs), cfg, plan, observer);
}

EvalResult random_baseline(const std::vector<DocumentResult>& docs, const PipelineConfig& cfg) {
  EvalResult result;
  result.k = cfg.top_k;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    require_labelled(docs[i]);
    auto ranked = docs[i].candidates;
    Rng rng = Rng::substream(cfg.seed, Stream::kRandomBaseline, {i});
    rng.shuffle(std::span<CandidatePhrase>(ranked));
    result.per_document.push_back(
        {docs[i].id, score_document(ranked_stems(ranked), docs[i].gold_stems, cfg.top_k, cfg.strict_at_k)});
  }
  aggregate(result);
  return result;
}

EvalResult frequency_baseline(const std::vector<DocumentResult>& docs, const PipelineConfig& cfg) {
  EvalResult result;
  result.k = cfg.top_k;
  for (const auto& d : docs) {
    require_labelled(d);
    auto ranked = d.candidates;
    for (auto& c : ranked) {
      c.score = static_cast<double>(c.occurrences);
      c.log_odds.reset();
    }
    sort_by_score(ranked);
    result.per_document.push_back({d.id, score_document(ranked_stems(ranked), d.gold_stems, cfg.top_k, cfg.strict_at_k)});
  }
  aggregate(result);
  return result;
}

void write_report_tsv(const EvalResult& r, std::ostream& out) {
  char buf[128];
  out << "doc_id\tprecision\trecall\tf1\n";
  for (const auto& d : r.per_document) {
    std::snprintf(buf, sizeof buf, "\t%.6f\t%.6f\t%.6f\n", d.score.precision, d.score.recall, d.score.f1);
    out << d.id << buf;
  }
  std::snprintf(buf, sizeof buf, "MEAN\t%.6f\t%.6f\t%.6f\n", r.precision, r.recall, r.f1);
  out << buf;
}

std::string report_json(const EvalResult& r, const Baselines& baselines, const ConfigEcho& config) {
  using nlohmann::ordered_json;
  const auto summary = [](const EvalResult& e) {
    return ordered_json{{"precision", e.precision}, {"recall", e.recall}, {"f1", e.f1}};
  };
  ordered_json j;
  j["k"] = r.k;
  j["documents"] = r.per_document.size();
  j["mean"] = summary(r);
  j["baselines"] = {{"random", summary(baselines.random)}, {"frequency", summary(baselines.frequency)}};
  ordered_json per = ordered_json::array();
  for (const auto& d : r.per_document)
    per.push_back({{"id", d.id}, {"precision", d.score.precision}, {"recall", d.score.recall}, {"f1", d.score.f1}});
  j["per_document"] = std::move(per);
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = std::move(cfg);
  return j.dump(2) + "\n";
}

}  // namespace surfke
