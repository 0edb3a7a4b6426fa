#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "surfke/candidates.hpp"
#include "surfke/embedding.hpp"
#include "surfke/gnb.hpp"
#include "surfke/text.hpp"
#include "surfke/walk_sampler.hpp"

namespace surfke {

/// Every tunable of the extraction pipeline. Layering: defaults, then a
/// config file, then command-line flags.
struct PipelineConfig {
  std::size_t window = 10;
  std::vector<PosTag> pos_allowed{PosTag::kNoun, PosTag::kAdj};
  std::size_t max_phrase_len = 4;
  std::size_t walks_per_node = 40;
  std::size_t walk_length = 8;
  std::size_t dim = 128;
  std::size_t context_window = 5;
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  double learning_rate = 0.025;
  double var_smoothing = 1e-9;
  std::size_t top_k = 10;
  std::size_t folds = 10;
  std::uint64_t seed = 42;
  CandidateMode candidate_mode = CandidateMode::kSubNgrams;
  bool strict_at_k = false;
  bool deterministic = true;

  /// Throws ConfigError for out-of-range values.
  void validate() const;

  PosFilter pos_filter() const;
  WalkConfig walk_config() const;
  EmbeddingConfig embedding_config(int threads = 0) const;
};

/// Keys accepted by apply_setting, in echo order. They match the long flag
/// names without the leading dashes.
const std::vector<std::string_view>& setting_keys();

/// Sets one value by key (`window`, `pos`, `lr`, `candidate-mode`, ...).
/// Underscores in keys are treated as hyphens. Throws ConfigError.
void apply_setting(PipelineConfig& cfg, std::string_view key, std::string_view value);

/// Applies every entry of a config file. Two forms are accepted: flat
/// `key=value` lines (`#` starts a comment), or a JSON object, in which case
/// its "config" member is used when present (so an evaluation report can be
/// fed back in).
void apply_config_file(PipelineConfig& cfg, const std::filesystem::path& path);

void apply_settings(PipelineConfig& cfg, const ConfigEcho& settings);

/// Effective configuration as ordered key/value strings. Values round-trip
/// exactly through apply_setting.
ConfigEcho to_settings(const PipelineConfig& cfg);

}  // namespace surfke
