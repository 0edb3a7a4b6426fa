#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "surfke/config.hpp"
#include "surfke/errors.hpp"

namespace fs = std::filesystem;
using namespace surfke;

namespace {

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("surfke_test_config_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("defaults") {
  const PipelineConfig cfg;
  CHECK(cfg.window == 10);
  CHECK(cfg.pos_allowed == std::vector{PosTag::kNoun, PosTag::kAdj});
  CHECK(cfg.max_phrase_len == 4);
  CHECK(cfg.walks_per_node == 40);
  CHECK(cfg.walk_length == 8);
  CHECK(cfg.dim == 128);
  CHECK(cfg.context_window == 5);
  CHECK(cfg.negatives == 5);
  CHECK(cfg.epochs == 5);
  CHECK(cfg.learning_rate == 0.025);
  CHECK(cfg.var_smoothing == 1e-9);
  CHECK(cfg.top_k == 10);
  CHECK(cfg.folds == 10);
  CHECK(cfg.seed == 42);
  CHECK(cfg.candidate_mode == CandidateMode::kSubNgrams);
  CHECK_FALSE(cfg.strict_at_k);
  CHECK(cfg.deterministic);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("settings round-trip through their string form") {
  PipelineConfig cfg;
  cfg.window = 3;
  cfg.pos_allowed = {PosTag::kAdj};
  cfg.learning_rate = 0.1 + 0.2;  // not exactly representable in short decimal
  cfg.var_smoothing = 3.5e-7;
  cfg.seed = 18446744073709551615ull;
  cfg.candidate_mode = CandidateMode::kMaximal;
  cfg.strict_at_k = true;
  cfg.deterministic = false;
  const auto echo = to_settings(cfg);
  CHECK(echo.size() == setting_keys().size());
  for (std::size_t i = 0; i < echo.size(); ++i) CHECK(echo[i].first == setting_keys()[i]);

  PipelineConfig back;
  apply_settings(back, echo);
  CHECK(to_settings(back) == echo);
  CHECK(back.learning_rate == cfg.learning_rate);
  CHECK(back.seed == cfg.seed);
}

TEST_CASE("apply_setting parsing and errors") {
  PipelineConfig cfg;
  apply_setting(cfg, "max_phrase_len", " 2 ");
  CHECK(cfg.max_phrase_len == 2);
  apply_setting(cfg, "learning-rate", "0.5");
  CHECK(cfg.learning_rate == 0.5);
  apply_setting(cfg, "pos", "noun, verb,NOUN");
  CHECK(cfg.pos_allowed == std::vector{PosTag::kNoun, PosTag::kVerb});
  apply_setting(cfg, "strict-at-k", "yes");
  CHECK(cfg.strict_at_k);

  CHECK_THROWS_AS(apply_setting(cfg, "windows", "3"), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "window", "-3"), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "window", "3x"), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "lr", "fast"), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "pos", ","), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "pos", "NOUN,THING"), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "deterministic", "maybe"), ConfigError);
  CHECK_THROWS_AS(apply_setting(cfg, "candidate-mode", "all"), ConfigError);
}

TEST_CASE("validation") {
  const auto invalid = [](auto mutate) {
    PipelineConfig cfg;
    mutate(cfg);
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  };
  invalid([](PipelineConfig& c) { c.window = 1; });
  invalid([](PipelineConfig& c) { c.walk_length = 1; });
  invalid([](PipelineConfig& c) { c.dim = 0; });
  invalid([](PipelineConfig& c) { c.learning_rate = 0.0; });
  invalid([](PipelineConfig& c) { c.var_smoothing = -1.0; });
  invalid([](PipelineConfig& c) { c.top_k = 0; });
  invalid([](PipelineConfig& c) { c.max_phrase_len = 0; });
}

TEST_CASE("key=value config files") {
  const auto path = write_temp("kv.conf", "# comment\nwindow = 4\n\ndim=32  # trailing\nseed=7\n");
  PipelineConfig cfg;
  apply_config_file(cfg, path);
  CHECK(cfg.window == 4);
  CHECK(cfg.dim == 32);
  CHECK(cfg.seed == 7);
  fs::remove(path);

  const auto bad = write_temp("bad.conf", "window 4\n");
  try {
    apply_config_file(cfg, bad);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  fs::remove(bad);
  CHECK_THROWS_AS(apply_config_file(cfg, "/nonexistent/surfke.conf"), ConfigError);
}

TEST_CASE("JSON config files, including a report's config member") {
  const auto flat = write_temp("flat.json", R"({"window": 6, "lr": 0.05, "strict_at_k": true, "pos": "ADJ"})");
  PipelineConfig cfg;
  apply_config_file(cfg, flat);
  CHECK(cfg.window == 6);
  CHECK(cfg.learning_rate == 0.05);
  CHECK(cfg.strict_at_k);
  CHECK(cfg.pos_allowed == std::vector{PosTag::kAdj});
  fs::remove(flat);

  const auto report = write_temp("report.json", R"({"k": 10, "config": {"dim": "24", "folds": "5"}})");
  PipelineConfig from_report;
  apply_config_file(from_report, report);
  CHECK(from_report.dim == 24);
  CHECK(from_report.folds == 5);
  fs::remove(report);

  const auto broken = write_temp("broken.json", "{\"window\": ");
  CHECK_THROWS_AS(apply_config_file(cfg, broken), ConfigError);
  fs::remove(broken);
}

TEST_CASE("derived module configs") {
  PipelineConfig cfg;
  cfg.seed = 5;
  cfg.dim = 12;
  const auto w = cfg.walk_config();
  CHECK(w.seed == 5);
  CHECK(w.walks_per_node == 40);
  const auto e = cfg.embedding_config(3);
  CHECK(e.dim == 12);
  CHECK(e.threads == 3);
  CHECK(e.seed == 5);
  CHECK(cfg.pos_filter().allows(PosTag::kAdj));
  CHECK(cfg.pos_filter().removes_stopwords());
}
