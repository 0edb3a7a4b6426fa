// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "surfke/candidates.hpp"
#include "surfke/corpus.hpp"
#include "surfke/embedding.hpp"
#include "surfke/evaluation.hpp"
#include "surfke/gnb.hpp"
#include "surfke/graph.hpp"
#include "surfke/walk_sampler.hpp"

namespace fs = std::filesystem;
using namespace surfke;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

oracle::EdgeMap edges_of(const WordGraph& g) {
  oracle::EdgeMap out;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (const auto& n : g.neighbors(u))
      if (g.word(u) < g.word(n.id)) out[{g.word(u), g.word(n.id)}] = n.weight;
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome graph_oracle() {
  Rng rng(1001);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.below(51);
    auto toks = oracle::random_tokens(rng, n, 2 + rng.below(15));
    std::vector<bool> mask(n);
    for (std::size_t i = 0; i < n; ++i) mask[i] = rng.below(5) != 0;
    const std::size_t w = 2 + rng.below(9);
    if (edges_of(build_graph(toks, mask, w)) != oracle::cooccurrence(toks, mask, w))
      return {false, "mismatch on sequence " + std::to_string(trial)};
  }
  return {true, "200 sequences, exact edge/weight agreement"};
}

Outcome transition_validity() {
  Rng rng(1002);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(20);
    std::vector<WordGraph::Edge> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.below(3) == 0) edges.push_back({u, v, 1 + rng.below(1000)});
    const auto g = WordGraph::from_edges(names(n), edges);
    for (VertexId v = 0; v < n; ++v) {
      const auto d = transition_distribution(g, v);
      if (d.empty()) continue;
      EdgeWeight total = 0;
      double sum = 0.0;
      for (std::size_t i = 0; i < d.targets.size(); ++i) {
        if (d.weights[i] != g.weight(v, d.targets[i])) return {false, "weight differs from the graph"};
        total += d.weights[i];
        sum += d.probabilities[i];
      }
      if (total != d.total) return {false, "total is not the integer weighted degree"};
      for (std::size_t i = 0; i < d.targets.size(); ++i)
        if (d.probabilities[i] != static_cast<double>(d.weights[i]) / static_cast<double>(total))
          return {false, "probability is not the rounded ratio w/total"};
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  }
  return {worst <= 1e-12, "max |sum - 1| = " + fmt("%.2e", worst)};
}

Outcome walk_statistics() {
  const std::vector<WordGraph::Edge> edges{{0, 1, 3}, {0, 2, 1}};
  const auto g = WordGraph::from_edges({"a", "b", "c"}, edges);
  WalkConfig cfg;
  cfg.walk_length = 2;
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    Rng rng = walk_rng(cfg.seed, 0, static_cast<std::size_t>(i));
    if (sample_walk(g, 0, cfg, rng).vertices.at(1) == 1) ++hits;
  }
  const double p = static_cast<double>(hits) / n;
  return {std::abs(p - 0.75) <= 0.01, "empirical P(b) = " + fmt("%.4f", p)};
}

Outcome gradient_check() {
  Rng rng(1004);
  const double h = 1e-5;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng.below(32);
    const std::size_t k = rng.below(8);
    const auto vec = [&] {
      std::vector<double> v(d);
      for (auto& x : v) x = rng.uniform() - 0.5;
      return v;
    };
    auto u = vec(), c = vec();
    std::vector<std::vector<double>> negs;
    for (std::size_t i = 0; i < k; ++i) negs.push_back(vec());
    const std::vector<std::span<const double>> neg_spans(negs.begin(), negs.end());
    const auto grad = sgns_pair_gradient(u, c, neg_spans);
    const auto probe = [&](std::vector<double>& target, const std::vector<double>& analytic) {
      for (std::size_t i = 0; i < d; ++i) {
        const double keep = target[i];
        target[i] = keep + h;
        const double up = oracle::sgns_loss(u, c, negs);
        target[i] = keep - h;
        const double down = oracle::sgns_loss(u, c, negs);
        target[i] = keep;
        const double numeric = (up - down) / (2.0 * h);
        const double scale = std::max({std::abs(analytic[i]), std::abs(numeric), 1e-6});
        worst = std::max(worst, std::abs(analytic[i] - numeric) / scale);
      }
    };
    probe(u, grad.center);
    probe(c, grad.context);
    for (std::size_t j = 0; j < k; ++j) probe(negs[j], grad.negatives[j]);
  }
  return {worst <= 1e-4, "max relative error " + fmt("%.2e", worst)};
}

Outcome closed_form_loss() {
  const std::vector<double> zero(16, 0.0);
  const std::vector<std::span<const double>> negs(5, std::span<const double>(zero));
  const double loss = sgns_pair_loss(zero, zero, negs);
  const double err = std::abs(loss - 6.0 * std::log(2.0));
  return {err <= 1e-12, "loss " + fmt("%.15f", loss) + ", error " + fmt("%.1e", err)};
}

Outcome barbell_clustering() {
  std::vector<WordGraph::Edge> edges;
  for (VertexId base : {0u, 6u})
    for (VertexId i = 0; i < 6; ++i)
      for (VertexId j = i + 1; j < 6; ++j) edges.push_back({base + i, base + j, 1});
  edges.push_back({5, 6, 1});
  const auto g = WordGraph::from_edges(names(12), edges);
  const auto m = train_embeddings(generate_corpus(g, WalkConfig{}), g.words(), EmbeddingConfig{});
  double intra = 0, inter = 0;
  int ni = 0, nx = 0;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = i + 1; j < 12; ++j) {
      const double c = cosine_similarity(m.input_row(i), m.input_row(j));
      if ((i < 6) == (j < 6)) {
        intra += c;
        ++ni;
      } else {
        inter += c;
        ++nx;
      }
    }
  intra /= ni;
  inter /= nx;
  return {intra > inter, "intra " + fmt("%.4f", intra) + " vs inter " + fmt("%.4f", inter)};
}

Outcome gnb_oracle() {
  Rng rng(1007);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 1 + rng.below(6);
    const std::size_t n = 4 + rng.below(30);
    std::vector<std::vector<double>> x(n, std::vector<double>(d));
    std::vector<bool> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = i < 2 ? i == 0 : rng.below(2) == 0;
      for (auto& v : x[i]) v = (y[i] ? 0.4 : -0.4) + 2.0 * (rng.uniform() - 0.5);
    }
    const auto model = fit(x, y);
    const auto stats = oracle::fit_stats(x, y, model.var_smoothing);
    for (int q = 0; q < 20; ++q) {
      std::vector<double> probe(d);
      for (auto& v : probe) v = 3.0 * (rng.uniform() - 0.5);
      worst = std::max(worst, std::abs(predict_proba(model, probe) - oracle::posterior(stats, probe)));
    }
  }

  const std::vector<std::vector<double>> sym{{1.0}, {3.0}, {-1.0}, {-3.0}};
  const auto m = fit(sym, {true, true, false, false});
  const double at0 = predict_proba(m, std::vector{0.0});
  const double at2 = predict_proba(m, std::vector{2.0});
  const double stated = 1.0 / (1.0 + std::exp(-4.0));
  const bool ok_random = worst <= 1e-9;
  const bool ok0 = at0 == 0.5;
  const bool ok2 = std::abs(at2 - stated) <= 1e-9;
  std::string detail = "50 datasets max |diff| " + fmt("%.1e", worst) + "; P(x=0) = " + fmt("%.17g", at0) +
                       "; P(x=2) = " + fmt("%.6f", at2) + " vs stated " + fmt("%.6f", stated);
  if (!ok2)
    detail += " (means +-2 with unit variance give log-odds 4x = 8 at x=2, i.e. " +
              fmt("%.6f", 1.0 / (1.0 + std::exp(-8.0))) + "; see README)";
  return {ok_random && ok0 && ok2, detail};
}

Outcome phrase_mean() {
  Rng rng(1008);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng.below(64), n = 1 + rng.below(4);
    std::vector<std::string> vocab = names(n);
    EmbeddingMatrix m(vocab, d);
    for (auto& v : m.input()) v = rng.uniform() * 2.0 - 1.0;
    CandidatePhrase c;
    c.words = vocab;
    std::vector<double> expected(d, 0.0);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t j = 0; j < d; ++j) expected[j] += m.input_row(w)[j];
    for (auto& v : expected) v /= static_cast<double>(n);
    if (phrase_vector(m, c) != expected) return {false, "mismatch on random case " + std::to_string(trial)};
  }
  EmbeddingMatrix sym({"p", "q", "r"}, 3);
  const double rows[3][3] = {{1.5, -2.0, 0.25}, {-0.5, 1.0, -1.25}, {-1.0, 1.0, 1.0}};
  for (std::size_t r = 0; r < 3; ++r) std::memcpy(sym.input_row(r).data(), rows[r], sizeof rows[r]);
  CandidatePhrase all;
  all.words = {"p", "q", "r"};
  if (phrase_vector(sym, all) != std::vector<double>(3, 0.0)) return {false, "zero-sum case is not exactly 0"};
  CandidatePhrase two;
  two.words = {"p", "q"};
  if (phrase_vector(sym, two) != std::vector<double>{0.5, -0.5, -0.5}) return {false, "two-word case"};
  return {true, "bit-for-bit on 100 random phrases and the symmetric cases"};
}

Outcome metric_formulas() {
  const std::vector<std::string> p1{"b", "d"}, g1{"b", "c"};
  const auto a = score_document(p1, g1, 2);
  const std::vector<std::string> p2{"a", "b", "c"}, g2{"a", "b", "c", "d"};
  const auto b = score_document(p2, g2, 10);
  const auto near = [](double x, double y) { return std::abs(x - y) <= 1e-12; };
  const bool hand = near(a.precision, 0.5) && near(a.recall, 0.5) && near(a.f1, 0.5) && near(b.precision, 1.0) &&
                    near(b.recall, 0.75) && near(b.f1, 6.0 / 7.0);
  std::vector<CandidatePhrase> ranked(15);
  for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].stemmed_form = "c" + std::to_string(i);
  const bool k10 = PipelineConfig{}.top_k == 10 && top_k(ranked).size() == 10;
  return {hand && k10, "hand cases " + std::string(hand ? "ok" : "wrong") + ", default k " +
                           std::to_string(PipelineConfig{}.top_k)};
}

Outcome end_to_end() {
  const auto start = std::chrono::steady_clock::now();
  const auto docs = load_corpus(fs::path(SURFKE_DATA_DIR) / "mini_corpus");
  if (docs.size() != 20) return {false, "mini corpus has " + std::to_string(docs.size()) + " documents"};
  PipelineConfig cfg;
  cfg.folds = 5;
  cfg.deterministic = true;

  const auto run_once = [&](EvalResult& eval, EvalResult& random) {
    const auto results = process_corpus(docs, cfg);
    eval = cross_validate(results, cfg, make_folds(docs.size(), cfg.folds, cfg.seed));
    random = random_baseline(results, cfg);
    std::ostringstream out;
    write_report_tsv(eval, out);
    out << report_json(eval, {random, frequency_baseline(results, cfg)}, to_settings(cfg));
    return out.str();
  };
  EvalResult eval, random, eval2, random2;
  const std::string first = run_once(eval, random);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string second = run_once(eval2, random2);

  const double margin = eval.f1 - random.f1;
  const bool fast = seconds < 180.0;
  const bool better = margin >= 0.10;
  const bool identical = first == second;
  return {fast && better && identical,
          "F1 " + fmt("%.4f", eval.f1) + " vs random " + fmt("%.4f", random.f1) + " (margin " +
              fmt("%+.4f", margin) + "), one run " + fmt("%.1f", seconds) + " s, reports " +
              (identical ? "identical" : "DIFFER")};
}

Outcome train_determinism() {
  const fs::path work = fs::temp_directory_path() / "surfke_acceptance";
  fs::create_directories(work);
  const std::string corpus = (fs::path(SURFKE_DATA_DIR) / "mini_corpus").string();
  std::ostringstream sink;
  const auto train = [&](const fs::path& out) {
    std::vector<std::string> args{"surfke", "train", corpus, "-o", out.string(), "--deterministic", "true"};
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli::run(static_cast<int>(argv.size()), argv.data(), sink, sink);
  };
  const auto a = work / "a.model", b = work / "b.model";
  if (train(a) != cli::kExitOk || train(b) != cli::kExitOk) return {false, "train failed: " + sink.str()};
  const std::string bytes = slurp(a);
  if (bytes != slurp(b)) return {false, "model files differ"};

  const StoredModel stored = load_model(a);
  std::ostringstream again;
  write_model(again, stored.model, stored.config);
  std::istringstream in(again.str());
  const bool lossless = again.str() == bytes && read_model(in, "rewrite").model == stored.model;
  fs::remove_all(work);
  return {lossless, std::to_string(bytes.size()) + "-byte models identical, round-trip " +
                        (lossless ? "lossless" : "LOSSY")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"graph oracle equivalence", 5, graph_oracle},
      {"transition-distribution validity", 5, transition_validity},
      {"walk sampler statistics", 10, walk_statistics},
      {"SGNS gradient check", 10, gradient_check},
      {"SGNS closed-form loss", 1, closed_form_loss},
      {"embedding clustering sanity", 30, barbell_clustering},
      {"GNB oracle equivalence", 5, gnb_oracle},
      {"phrase-mean exactness", 1, phrase_mean},
      {"metric formulas", 1, metric_formulas},
      {"end-to-end smoke", 360, end_to_end},  // two full runs; each must take < 180 s
      {"determinism", 60, train_determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + fmt("%.0f", c.budget_seconds) + " s budget";
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2zu. %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed;
}
