#include <exception>

#include <omp.h>

#include "surfke/errors.hpp"
#include "surfke/pipeline.hpp"

namespace surfke {

DocumentResult process_document(const Document& doc, const PipelineConfig& cfg, bool keep_artifacts, int threads) {
  cfg.validate();
  DocumentResult out;
  out.id = doc.id;

  const auto mask = candidate_word_mask(doc.tokens, cfg.pos_filter());
  WordGraph graph = build_graph(doc.tokens, mask, cfg.window);
  out.graph = graph_stats(graph);
  if (graph.vertex_count() > 0 && cfg.dim > graph.vertex_count())
    out.warnings.push_back("document '" + doc.id + "': dim " + std::to_string(cfg.dim) + " exceeds vertex count " +
                           std::to_string(graph.vertex_count()));

  std::vector<Walk> walks = generate_corpus(graph, cfg.walk_config(), threads);
  EmbeddingMatrix emb = train_embeddings(walks, graph.words(), cfg.embedding_config(threads));

  out.candidates = extract_candidates(doc.tokens, mask, cfg.max_phrase_len, cfg.candidate_mode);
  for (auto& c : out.candidates) c.feature = phrase_vector(emb, c);

  if (doc.gold) {
    label_candidates(out.candidates, *doc.gold);
    for (const auto& g : *doc.gold) out.gold_stems.push_back(stemmed_form(g));
  }
  if (keep_artifacts) out.artifacts = DocumentArtifacts{std::move(graph), std::move(walks), std::move(emb)};
  return out;
}

std::vector<DocumentResult> process_corpus(const std::vector<Document>& docs, const PipelineConfig& cfg, int jobs) {
  cfg.validate();
  std::vector<DocumentResult> results(docs.size());
  std::vector<std::exception_ptr> errors(docs.size());
  const int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      results[idx] = process_document(docs[idx], cfg, false, 1);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

GnbModel train_classifier(const std::vector<const DocumentResult*>& results, const PipelineConfig& cfg) {
  std::vector<std::vector<double>> features;
  std::vector<bool> labels;
  for (const DocumentResult* r : results) {
    for (const auto& c : r->candidates) {
      if (!c.label) continue;
      features.push_back(c.feature);
      labels.push_back(*c.label);
    }
  }
  if (features.empty()) throw TrainingError("cannot fit classifier: no labelled candidates");
  return fit(features, labels, cfg.var_smoothing);
}

GnbModel train_classifier(const std::vector<DocumentResult>& results, const PipelineConfig& cfg) {
  std::vector<const DocumentResult*> ptrs;
  for (const auto& r : results) ptrs.push_back(&r);
  return train_classifier(ptrs, cfg);
}

void require_gold(const std::vector<Document>& docs) {
  for (const auto& d : docs)
    if (!d.gold) throw CorpusError("document '" + d.id + "' has no gold keyphrases (.key file)");
}

}  // namespace surfke
