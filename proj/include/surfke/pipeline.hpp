#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfke/candidates.hpp"
#include "surfke/config.hpp"
#include "surfke/embedding.hpp"
#include "surfke/gnb.hpp"
#include "surfke/graph.hpp"
#include "surfke/text.hpp"
#include "surfke/walk_sampler.hpp"

namespace surfke {

/// Intermediate products of one document, kept only when requested (debug dumps).
struct DocumentArtifacts {
  WordGraph graph;
  std::vector<Walk> walks;
  EmbeddingMatrix embedding;
};

/// Featurised (and, with gold, labelled) candidates of one document.
struct DocumentResult {
  std::string id;
  GraphStats graph;
  std::vector<CandidatePhrase> candidates;
  std::vector<std::string> gold_stems;  // empty when the document has no gold
  std::vector<std::string> warnings;
  std::optional<DocumentArtifacts> artifacts;
};

/// graph -> walks -> embeddings -> candidates -> phrase vectors (-> labels).
/// Each document gets its own graph and embedding; randomness comes from
/// cfg.seed substreams only, so identical texts give identical results.
DocumentResult process_document(const Document& doc, const PipelineConfig& cfg, bool keep_artifacts = false,
                                int threads = 1);

/// process_document over a corpus, parallel across documents. Output order
/// matches input order.
std::vector<DocumentResult> process_corpus(const std::vector<Document>& docs, const PipelineConfig& cfg,
                                           int jobs = 0);

/// Fits the classifier on every labelled candidate of `results`.
GnbModel train_classifier(const std::vector<const DocumentResult*>& results, const PipelineConfig& cfg);
GnbModel train_classifier(const std::vector<DocumentResult>& results, const PipelineConfig& cfg);

/// Throws CorpusError naming the first document without gold keyphrases.
void require_gold(const std::vector<Document>& docs);

}  // namespace surfke
