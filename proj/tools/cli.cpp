#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "surfke/config.hpp"
#include "surfke/corpus.hpp"
#include "surfke/errors.hpp"
#include "surfke/evaluation.hpp"
#include "surfke/gnb.hpp"
#include "surfke/pipeline.hpp"

namespace surfke::cli {
namespace {

// Pipeline flags shared by every subcommand. Values are kept as strings and
// applied through apply_setting after the config file, so flags win.
struct PipelineFlags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_file;
  int jobs = 0;
  bool verbose = false;

  void attach(CLI::App* app) {
    const std::pair<const char*, const char*> flags[] = {
        {"window", "co-occurrence window in tokens (>= 2)"},
        {"pos", "comma-separated POS tags that pass the filter, e.g. NOUN,ADJ"},
        {"max-phrase-len", "longest candidate phrase in words"},
        {"walks-per-node", "random walks started at each vertex"},
        {"walk-length", "vertices per walk"},
        {"dim", "embedding dimension"},
        {"context-window", "skip-gram context size in walk positions"},
        {"negatives", "negative samples per pair"},
        {"epochs", "training passes over the walk corpus"},
        {"lr", "initial learning rate"},
        {"var-smoothing", "GNB variance floor, relative to the largest variance"},
        {"top-k", "number of keyphrases returned / evaluated"},
        {"folds", "cross-validation folds"},
        {"seed", "master random seed"},
        {"candidate-mode", "subngrams or maximal"},
    };
    for (const auto& [name, help] : flags)
      options[name] = app->add_option(std::string("--") + name, values[name], help);
    options["strict-at-k"] =
        app->add_option("--strict-at-k", values["strict-at-k"], "divide precision by k instead of min(k, #predicted)")
            ->expected(0, 1)
            ->default_str("true");
    options["deterministic"] =
        app->add_option("--deterministic", values["deterministic"], "single-threaded reproducible embedding training")
            ->expected(0, 1)
            ->default_str("true");
    app->add_option("--config", config_file, "key=value (or JSON report) configuration file");
    app->add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    app->add_flag("--verbose", verbose, "log progress to standard error");
  }

  void apply(PipelineConfig& cfg) const {
    if (!config_file.empty()) apply_config_file(cfg, config_file);
    for (const auto& key : setting_keys()) {
      const auto it = options.find(std::string(key));
      if (it == options.end() || it->second->count() == 0) continue;
      std::string v = values.at(std::string(key));
      if (v.empty() && (key == "strict-at-k" || key == "deterministic")) v = "true";
      apply_setting(cfg, key, v);
    }
    cfg.validate();
  }
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CorpusError("cannot write output file '" + path + "'");
  return out;
}

void log_config(std::ostream& err, const PipelineConfig& cfg) {
  for (const auto& [k, v] : to_settings(cfg)) err << "config " << k << '=' << v << '\n';
}

void log_warnings(std::ostream& err, const DocumentResult& r, bool verbose) {
  if (!verbose) return;
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
}

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

int cmd_extract(const std::string& doc_path, const std::string& model_path, const std::string& dump_walks,
                const std::string& dump_embeddings, const PipelineFlags& flags, std::ostream& out,
                std::ostream& err) {
  const StoredModel stored = load_model(model_path);
  PipelineConfig cfg;
  apply_settings(cfg, stored.config);
  flags.apply(cfg);
  if (stored.model.dim() != cfg.dim)
    throw ModelError("model file '" + model_path + "' has dimension " + std::to_string(stored.model.dim()) +
                     " but the configuration asks for " + std::to_string(cfg.dim));
  if (flags.verbose) log_config(err, cfg);

  const Document doc = load_document(doc_path);
  const bool dumps = !dump_walks.empty() || !dump_embeddings.empty();
  DocumentResult r = process_document(doc, cfg, dumps, flags.jobs);
  log_warnings(err, r, flags.verbose);
  if (!dump_walks.empty()) {
    auto f = open_output(dump_walks);
    write_walks(r.artifacts->graph, r.artifacts->walks, f);
  }
  if (!dump_embeddings.empty()) {
    auto f = open_output(dump_embeddings);
    write_embeddings(r.artifacts->embedding, f);
  }

  rank_candidates(stored.model, r.candidates);
  std::size_t rank = 0;
  for (const auto& c : top_k(r.candidates, cfg.top_k))
    out << ++rank << '\t' << c.text() << '\t' << fixed4(*c.score) << '\n';
  return kExitOk;
}

int cmd_train(const std::string& corpus_dir, const std::string& output, const PipelineFlags& flags,
              std::ostream& err) {
  PipelineConfig cfg;
  flags.apply(cfg);
  if (flags.verbose) log_config(err, cfg);
  const auto docs = load_corpus(corpus_dir);
  require_gold(docs);
  if (flags.verbose) err << "loaded " << docs.size() << " documents\n";
  const auto results = process_corpus(docs, cfg, flags.jobs);
  for (const auto& r : results) log_warnings(err, r, flags.verbose);
  const GnbModel model = train_classifier(results, cfg);
  save_model(output, model, to_settings(cfg));
  if (flags.verbose) err << "wrote model " << output << '\n';
  return kExitOk;
}

int cmd_evaluate(const std::string& corpus_dir, const std::string& report, const PipelineFlags& flags,
                 std::ostream& out, std::ostream& err) {
  PipelineConfig cfg;
  flags.apply(cfg);
  if (flags.verbose) log_config(err, cfg);
  const auto docs = load_corpus(corpus_dir);
  require_gold(docs);
  if (cfg.folds < 2) throw ConfigError("cross-validation needs at least 2 folds");
  const CvPlan plan = make_folds(docs.size(), cfg.folds, cfg.seed);
  const auto results = process_corpus(docs, cfg, flags.jobs);
  for (const auto& r : results) log_warnings(err, r, flags.verbose);
  const EvalResult eval = cross_validate(results, cfg, plan);
  const Baselines baselines{random_baseline(results, cfg), frequency_baseline(results, cfg)};

  {
    auto f = open_output(report + ".tsv");
    write_report_tsv(eval, f);
  }
  {
    auto f = open_output(report + ".json");
    f << report_json(eval, baselines, to_settings(cfg));
  }
  out << "precision=" << fixed4(eval.precision) << " recall=" << fixed4(eval.recall) << " f1=" << fixed4(eval.f1)
      << " (top-" << cfg.top_k << ", " << eval.per_document.size() << " documents, " << cfg.folds << " folds)\n";
  out << "random baseline f1=" << fixed4(baselines.random.f1) << " frequency baseline f1="
      << fixed4(baselines.frequency.f1) << '\n';
  return kExitOk;
}

int cmd_inspect_graph(const std::string& doc_path, const PipelineFlags& flags, std::ostream& out) {
  PipelineConfig cfg;
  flags.apply(cfg);
  const Document doc = load_document(doc_path);
  const auto mask = candidate_word_mask(doc.tokens, cfg.pos_filter());
  const WordGraph g = build_graph(doc.tokens, mask, cfg.window);
  write_edge_tsv(g, out);
  const GraphStats s = graph_stats(g);
  out << "# vertices=" << s.vertices << " edges=" << s.edges << " total_weight=" << s.total_weight
      << " max_degree=" << s.max_degree << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"surfke: keyphrase extraction from word-graph embeddings"};
  app.require_subcommand(1);

  PipelineFlags extract_flags, train_flags, eval_flags, graph_flags;
  std::string doc_path, model_path, dump_walks, dump_embeddings, corpus_dir, output, report = "surfke_report";

  auto* extract = app.add_subcommand("extract", "print the top-k keyphrases of a document");
  extract->add_option("document", doc_path, "document (.txt or .tagged)")->required();
  extract->add_option("--model", model_path, "trained model file")->required();
  extract->add_option("--dump-walks", dump_walks, "write the walk corpus to this file");
  extract->add_option("--dump-embeddings", dump_embeddings, "write the word vectors to this file");
  extract_flags.attach(extract);

  auto* train = app.add_subcommand("train", "fit the classifier on a corpus with gold keys");
  train->add_option("corpus", corpus_dir, "corpus directory")->required();
  train->add_option("-o,--output", output, "model file to write")->required();
  train_flags.attach(train);

  auto* evaluate = app.add_subcommand("evaluate", "document-level cross-validation with P/R/F1 report");
  evaluate->add_option("corpus", corpus_dir, "corpus directory")->required();
  evaluate->add_option("--report", report, "report path prefix (.tsv and .json are appended)")->capture_default_str();
  eval_flags.attach(evaluate);

  auto* inspect = app.add_subcommand("inspect-graph", "print the co-occurrence graph as TSV");
  inspect->add_option("document", doc_path, "document (.txt or .tagged)")->required();
  graph_flags.attach(inspect);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (extract->parsed())
      return cmd_extract(doc_path, model_path, dump_walks, dump_embeddings, extract_flags, out, err);
    if (train->parsed()) return cmd_train(corpus_dir, output, train_flags, err);
    if (evaluate->parsed()) return cmd_evaluate(corpus_dir, report, eval_flags, out, err);
    if (inspect->parsed()) return cmd_inspect_graph(doc_path, graph_flags, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace surfke::cli
