#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "surfke/config.hpp"
#include "surfke/pipeline.hpp"

namespace surfke {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct DocumentScore {
  std::string id;
  PrfScore score;
};

struct EvalResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<DocumentScore> per_document;
  std::size_t k = 10;
};

/// P/R/F1 of ranked stemmed predictions against a stemmed gold set. Repeated
/// predictions count once (first occurrence). P divides by min(k, #predicted)
/// or, with strict_at_k, by k. F1 is 0 when P + R = 0. Throws ScoringError for
/// an empty gold set.
PrfScore score_document(std::span<const std::string> predicted, std::span<const std::string> gold, std::size_t k,
                        bool strict_at_k = false);

/// Document-level fold assignment: seeded shuffle, then round-robin.
struct CvPlan {
  std::size_t folds = 10;
  std::uint64_t seed = 42;
  std::vector<std::size_t> assignment;  // document index -> fold

  std::vector<std::size_t> fold_members(std::size_t fold) const;
};

/// Throws ConfigError when folds is 0 or exceeds the document count.
CvPlan make_folds(std::size_t documents, std::size_t folds, std::uint64_t seed);

/// Called once per fold with the ids used for training and for testing.
using FoldObserver =
    std::function<void(std::size_t fold, const std::vector<std::string>& train_ids,
                        const std::vector<std::string>& test_ids)>;

/// Runs the folds over already-processed documents: for each fold the
/// classifier is fitted on the other folds' candidates and the held-out
/// documents are ranked and scored at top-k. Aggregates are means over all
/// documents. Throws ConfigError for fewer than 2 folds.
EvalResult cross_validate(const std::vector<DocumentResult>& docs, const PipelineConfig& cfg, const CvPlan& plan,
                          const FoldObserver& observer = {});

/// Full protocol from raw documents. Every document must have gold keys;
/// this is checked before any processing starts.
EvalResult cross_validate(const std::vector<Document>& corpus, const PipelineConfig& cfg, const CvPlan& plan,
                          int jobs = 0, const FoldObserver& observer = {});

/// Sanity baselines over the same candidates (no training involved).
EvalResult random_baseline(const std::vector<DocumentResult>& docs, const PipelineConfig& cfg);
EvalResult frequency_baseline(const std::vector<DocumentResult>& docs, const PipelineConfig& cfg);

/// Mean of per-document scores (the aggregate rule used everywhere).
void aggregate(EvalResult& result);

/// `doc_id<TAB>precision<TAB>recall<TAB>f1` header, one row per document,
/// then a MEAN row. Six decimals.
void write_report_tsv(const EvalResult& result, std::ostream& out);

struct Baselines {
  EvalResult random;
  EvalResult frequency;
};

/// JSON summary with the echoed configuration.
std::string report_json(const EvalResult& result, const Baselines& baselines, const ConfigEcho& config);

}  // namespace surfke
